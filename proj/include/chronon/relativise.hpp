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

#include "chronon/clock.hpp"
#include "chronon/quantum.hpp"

namespace chronon {

// An operator on (leading system) (x) (reference clock), produced by one
// of the relativisation maps below. The reference factor is always last.
struct RelativisedObservable {
  ComplexMatrix matrix;
  Index leading_dim = 0;
  Index reference_dim = 0;

  Index dim() const { return leading_dim * reference_dim; }
};

// Pairs a system observable a (with dynamics h_s) with a reference
// clock:
//
//   Y(a) = sum_m alpha_{-m}(a) (x) |m><m|
//
// where alpha_t(a) = exp(i h_s t) a exp(-i h_s t). The result commutes
// with h_s (x) 1 + 1 (x) P at integer shifts.
RelativisedObservable relativise_system(const ComplexMatrix& a,
                                        const ComplexMatrix& h_s,
                                        const CyclicClock& clock_r);

// Pairs the n-th position effect of clock C with reference clock R:
//
//   Z_n = sum_m |n+m><n+m| (x) |m><m|
//
// Both clocks must have the same tick count.
RelativisedObservable relativise_clock_povm(const CyclicClock& clock_c,
                                            const CyclicClock& clock_r, int n);

// Partial trace of the trailing reference factor against a state on it.
ComplexMatrix restrict_reference(const RelativisedObservable& obs,
                                 const DensityState& rho_r);

// Max Frobenius deviation of U(k)^dagger obs U(k) from obs, with
// U(k) = exp(-i total_h k), over the given integer shifts.
double check_invariance(const RelativisedObservable& obs,
                        const ComplexMatrix& total_h,
                        std::span<const int> shifts);

// Same, with shifts 0 .. reference_dim - 1.
double check_invariance(const RelativisedObservable& obs,
                        const ComplexMatrix& total_h);

// h_lead (x) 1 + 1 (x) generator(clock_r).
ComplexMatrix pair_hamiltonian(const ComplexMatrix& h_lead,
                               const CyclicClock& clock_r);

// Covariance of the restricted clock-position family: for every n and
// every integer t,
//
//   exp(i P_C t) G_n exp(-i P_C t) = G_{n-t},   G_n = restrict(Z_n)
//
// Returns the max Frobenius deviation over n, t in 0 .. d-1.
double check_restriction_covariance(const CyclicClock& clock_c,
                                    const CyclicClock& clock_r,
                                    const DensityState& rho_r);

// Covariance of the restricted system family: for every integer t,
//
//   alpha_t(restrict(Y(a))) = restrict(Y(alpha_t(a)))
//
// Returns the max Frobenius deviation over t in 0 .. d-1.
double check_restriction_covariance(const ComplexMatrix& a,
                                    const ComplexMatrix& h_s,
                                    const CyclicClock& clock_r,
                                    const DensityState& rho_r);

// Relativising C's position effects against R and R's against C give
// the same operator up to outcome reindexing:
//
//   sum_m |x+m><x+m| (x) |m><m| = sum_u |u><u| (x) |u-x><u-x|
//
// Returns the max Frobenius deviation over x in 0 .. d-1, with both
// sides assembled independently.
double exchange_identity_check(const CyclicClock& clock_c,
                               const CyclicClock& clock_r);

}  // namespace chronon
