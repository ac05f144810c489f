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

#include "chronon/quantum.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace chronon {

namespace {

constexpr double kEigenvalueSlack = 1e-10;

}  // namespace

DensityState::DensityState(const ComplexMatrix& rho) : mat_(rho) {
  require_hermitian(rho, "validate_state");
  const double trace_dev = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (trace_dev > 1e-10) {
    throw NotUnitTraceError("validate_state: trace deviates from 1 by " +
                            std::to_string(trace_dev));
  }
  const SpectralDecomposition eig = hermitian_eig(rho);
  if (eig.eigenvalues(0) < -kEigenvalueSlack) {
    throw NotPositiveError("validate_state: eigenvalue " +
                           std::to_string(eig.eigenvalues(0)) +
                           " below -1e-10");
  }
}

DensityState DensityState::pure(const ComplexVector& psi) {
  const double norm_dev = std::abs(psi.norm() - 1.0);
  if (norm_dev > 1e-10) {
    throw NotNormalizedError("pure state: vector norm deviates from 1 by " +
                             std::to_string(norm_dev));
  }
  return DensityState(Trusted{}, psi * psi.adjoint());
}

DensityState DensityState::trusted(ComplexMatrix rho) {
  return DensityState(Trusted{}, std::move(rho));
}

Povm::Povm(std::vector<ComplexMatrix> effects)
    : outcomes_(effects.size()), effects_(std::move(effects)) {
  std::iota(outcomes_.begin(), outcomes_.end(), 0);
  validate();
}

Povm::Povm(std::vector<int> outcomes, std::vector<ComplexMatrix> effects)
    : outcomes_(std::move(outcomes)), effects_(std::move(effects)) {
  validate();
}

void Povm::validate() const {
  if (effects_.empty()) {
    throw DimensionError("validate_povm: no effects");
  }
  if (outcomes_.size() != effects_.size()) {
    throw DimensionError("validate_povm: " + std::to_string(outcomes_.size()) +
                         " outcomes for " + std::to_string(effects_.size()) +
                         " effects");
  }
  const Index dim = effects_.front().rows();
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (const ComplexMatrix& e : effects_) {
    require_hermitian(e, "validate_povm effect");
    if (e.rows() != dim) {
      throw DimensionError("validate_povm: effects have mixed dimensions");
    }
    const SpectralDecomposition eig = hermitian_eig(e);
    if (eig.eigenvalues(0) < -kEigenvalueSlack ||
        eig.eigenvalues(eig.eigenvalues.size() - 1) > 1.0 + kEigenvalueSlack) {
      throw EffectOutOfRangeError(
          "validate_povm: effect eigenvalues outside [0, 1] beyond 1e-10");
    }
    sum += e;
  }
  const double completeness = (sum - identity(dim)).norm();
  if (completeness > 1e-10) {
    throw NotCompleteError(
        "validate_povm: effects sum deviates from identity by " +
        std::to_string(completeness));
  }
}

Povm Povm::sharp_basis(Index dim) {
  std::vector<ComplexMatrix> effects;
  effects.reserve(static_cast<std::size_t>(dim));
  for (Index n = 0; n < dim; ++n) {
    effects.push_back(basis_projector(dim, n));
  }
  return Povm(std::move(effects));
}

Povm Povm::trivial(Index dim) {
  return Povm(std::vector<ComplexMatrix>{identity(dim)});
}

std::vector<double> probabilities(const DensityState& rho, const Povm& m) {
  if (rho.dim() != m.dim()) {
    throw DimensionError("probabilities: state dimension " +
                         std::to_string(rho.dim()) +
                         " does not match effect dimension " +
                         std::to_string(m.dim()));
  }
  std::vector<double> p(m.size());
  double total = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    p[i] = (rho.matrix() * m.effect(i)).trace().real();
    if (p[i] < -1e-12 || p[i] > 1.0 + 1e-12) {
      throw Error("probabilities: value " + std::to_string(p[i]) +
                  " outside [0, 1] beyond 1e-12");
    }
    total += p[i];
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw Error("probabilities: sum deviates from 1 by " +
                std::to_string(std::abs(total - 1.0)));
  }
  return p;
}

DensityState product_state(std::span<const DensityState> parts) {
  if (parts.empty()) {
    throw DimensionError("product_state: no factors");
  }
  ComplexMatrix out = parts[0].matrix();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out = kron(out, parts[i].matrix());
  }
  return DensityState::trusted(std::move(out));
}

}  // namespace chronon
