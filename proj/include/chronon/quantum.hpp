// Copyright 2026 The Chronon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <vector>

#include "chronon/opalg.hpp"

namespace chronon {

// A validated density matrix: Hermitian, eigenvalues >= -1e-10, trace
// within 1e-10 of one. Construction is the validation.
class DensityState {
 public:
  explicit DensityState(const ComplexMatrix& rho);

  // |psi><psi| for a normalized vector. Throws NotNormalizedError if the
  // norm deviates from 1 by more than 1e-10.
  static DensityState pure(const ComplexVector& psi);

  // Wraps a matrix that is valid by construction, skipping the
  // eigenvalue check. For composing already-validated states.
  static DensityState trusted(ComplexMatrix rho);

  const ComplexMatrix& matrix() const { return mat_; }
  Index dim() const { return mat_.rows(); }

 private:
  struct Trusted {};
  DensityState(Trusted, ComplexMatrix rho) : mat_(std::move(rho)) {}

  ComplexMatrix mat_;
};

// A validated discrete POVM: Hermitian effects with eigenvalues in
// [-1e-10, 1 + 1e-10] that sum to the identity within 1e-10 (Frobenius).
class Povm {
 public:
  // Outcome labels default to 0..n-1.
  explicit Povm(std::vector<ComplexMatrix> effects);
  Povm(std::vector<int> outcomes, std::vector<ComplexMatrix> effects);

  // The sharp observable {|n><n|} in the standard basis.
  static Povm sharp_basis(Index dim);

  // The trivial observable {identity}.
  static Povm trivial(Index dim);

  std::size_t size() const { return effects_.size(); }
  Index dim() const { return effects_.front().rows(); }
  const ComplexMatrix& effect(std::size_t i) const { return effects_[i]; }
  int outcome(std::size_t i) const { return outcomes_[i]; }
  const std::vector<ComplexMatrix>& effects() const { return effects_; }
  const std::vector<int>& outcomes() const { return outcomes_; }

 private:
  void validate() const;

  std::vector<int> outcomes_;
  std::vector<ComplexMatrix> effects_;
};

inline DensityState validate_state(const ComplexMatrix& rho) {
  return DensityState(rho);
}

inline Povm validate_povm(std::vector<ComplexMatrix> effects) {
  return Povm(std::move(effects));
}

// Born probabilities p_i = Re tr[rho E_i]. Postconditions (each p_i in
// [-1e-12, 1 + 1e-12], sum within 1e-10 of one) are asserted and throw
// Error on violation.
std::vector<double> probabilities(const DensityState& rho, const Povm& m);

// Tensor product of density states, in the given order.
DensityState product_state(std::span<const DensityState> parts);

}  // namespace chronon
