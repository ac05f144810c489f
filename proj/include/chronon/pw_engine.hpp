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

#include "chronon/clock.hpp"
#include "chronon/quantum.hpp"
#include "chronon/relativise.hpp"

namespace chronon {

// Time marginals at or below this weight have no conditional defined.
inline constexpr double kConditionalThreshold = 1e-12;

// The joint system-and-time observable on S (x) C (x) R built from a
// system POVM {A(k)} with dynamics h_s and two equal-size clocks:
//
//   M(k, n) = sum_j alpha_{n-j}(A(k)) (x) |j><j| (x) |j-n><j-n|
//
// (indices mod d; equivalently sum_m alpha_{-m}(A(k)) (x)
// |n+m><n+m| (x) |m><m| with -m ~ n-j in Z_d). The Heisenberg
// parameter is the literal difference n - j of the outcome tag and
// the clock cell, so conditioning a localized clock at |c> reads the
// system at time n - c for any generator, with no wrap-around at the
// d boundary. Entries are materialized on demand; the evolved effects
// are precomputed for all parameters in (-d, d).
class JointObservable {
 public:
  JointObservable(const Povm& system_povm, const ComplexMatrix& h_s,
                  const CyclicClock& clock_c, const CyclicClock& clock_r);

  int clock_ticks() const { return d_; }
  std::size_t outcome_count() const { return povm_.size(); }
  Index system_dim() const { return povm_.dim(); }
  Index total_dim() const { return system_dim() * d_ * d_; }

  const Povm& system_povm() const { return povm_; }

  // alpha_t(A(k)) for integer t in (-d, d).
  const ComplexMatrix& alpha_effect(std::size_t k, int t) const;

  // Dense M(k, n).
  ComplexMatrix entry(std::size_t k, int n) const;

 private:
  int d_;
  Povm povm_;
  std::vector<std::vector<ComplexMatrix>> evolved_;  // [k][t + d - 1]
};

inline JointObservable joint_observable(const Povm& system_povm,
                                        const ComplexMatrix& h_s,
                                        const CyclicClock& clock_c,
                                        const CyclicClock& clock_r) {
  return JointObservable(system_povm, h_s, clock_c, clock_r);
}

// P(k, n) = tr[rho M(k, n)], with the time marginal P(n) = sum_k P(k, n).
// Entries are >= -1e-12 and sum to 1 within 1e-10; violations throw.
struct JointDistribution {
  RealMatrix joint;          // outcome x tick
  RealVector time_marginal;  // tick
};

JointDistribution joint_probability(const JointObservable& m,
                                    const DensityState& rho);

// P(k | n) = P(k, n) / P(n) wherever P(n) exceeds the threshold;
// undefined columns hold NaN. Throws AllMarginalsZeroError when no
// column is defined.
struct ConditionalTable {
  RealMatrix conditional;  // outcome x tick
  std::vector<bool> defined;
};

ConditionalTable conditional(const JointDistribution& dist,
                             double threshold = kConditionalThreshold);

// History vector on S (x) C (x) R pairing clock C's reading l with the
// system evolved to l and the reference shifted by l:
//
//   sum_l lambda_l (exp(-i h_s l) psi_s) (x) |l> (x) (exp(-i P_R l) xi)
//
// lambdas must have one weight per tick with unit total weight; psi_s
// and xi must be normalized.
ComplexVector entangled_state(std::span<const Complex> lambdas,
                              const ComplexMatrix& h_s,
                              const CyclicClock& clock_c,
                              const CyclicClock& clock_r,
                              const ComplexVector& psi_s,
                              const ComplexVector& xi);

// Group average of a clock-space observable over all integer shifts:
//
//   avg = (1/d) sum_k U(k) a U(k)^dagger
//
// The average commutes with every shift, so for an irreducible shift
// family it lands on the scalars.
struct KucharReport {
  ComplexMatrix average;
  double distance_to_scalar;
};

KucharReport kuchar_average(const ComplexMatrix& a, const CyclicClock& clock);

// Frobenius distance from a to the nearest scalar multiple of the
// identity, min_c ||a - c 1||_F, attained at c = tr[a] / dim.
double distance_to_scalar(const ComplexMatrix& a);

// h_s (x) 1 (x) 1 + 1 (x) P_C (x) 1 + 1 (x) 1 (x) P_R.
ComplexMatrix total_hamiltonian(const ComplexMatrix& h_s,
                                const CyclicClock& clock_c,
                                const CyclicClock& clock_r);

}  // namespace chronon
