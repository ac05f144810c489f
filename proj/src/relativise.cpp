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

#include "chronon/relativise.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace chronon {

RelativisedObservable relativise_system(const ComplexMatrix& a,
                                        const ComplexMatrix& h_s,
                                        const CyclicClock& clock_r) {
  require_square(a, "relativise_system");
  require_hermitian(h_s, "relativise_system generator");
  if (a.rows() != h_s.rows()) {
    throw DimensionError(
        "relativise_system: observable and generator sizes differ");
  }
  const int d = clock_r.ticks();
  const SpectralDecomposition eig = hermitian_eig(h_s);
  RelativisedObservable out;
  out.leading_dim = a.rows();
  out.reference_dim = d;
  out.matrix = ComplexMatrix::Zero(out.dim(), out.dim());
  for (int m = 0; m < d; ++m) {
    out.matrix += kron(heisenberg(a, eig, -static_cast<double>(m)),
                       clock_r.position_projector(m));
  }
  return out;
}

RelativisedObservable relativise_clock_povm(const CyclicClock& clock_c,
                                            const CyclicClock& clock_r,
                                            int n) {
  if (clock_c.ticks() != clock_r.ticks()) {
    throw DimensionError("relativise_clock_povm: tick counts differ");
  }
  const int d = clock_r.ticks();
  RelativisedObservable out;
  out.leading_dim = d;
  out.reference_dim = d;
  out.matrix = ComplexMatrix::Zero(out.dim(), out.dim());
  for (int m = 0; m < d; ++m) {
    out.matrix +=
        kron(clock_c.position_projector(n + m), clock_r.position_projector(m));
  }
  return out;
}

ComplexMatrix restrict_reference(const RelativisedObservable& obs,
                                 const DensityState& rho_r) {
  if (rho_r.dim() != obs.reference_dim) {
    throw DimensionError(
        "restrict_reference: state does not match reference factor");
  }
  return weighted_partial_trace(obs.matrix, obs.leading_dim, obs.reference_dim,
                                rho_r.matrix());
}

double check_invariance(const RelativisedObservable& obs,
                        const ComplexMatrix& total_h,
                        std::span<const int> shifts) {
  require_hermitian(total_h, "check_invariance generator");
  if (total_h.rows() != obs.dim()) {
    throw DimensionError("check_invariance: generator size " +
                         std::to_string(total_h.rows()) +
                         " does not match observable size " +
                         std::to_string(obs.dim()));
  }
  const SpectralDecomposition eig = hermitian_eig(total_h);
  double max_dev = 0.0;
  for (const int k : shifts) {
    const ComplexMatrix u = evolve_unitary(eig, static_cast<double>(k));
    const double dev = (u.adjoint() * obs.matrix * u - obs.matrix).norm();
    max_dev = std::max(max_dev, dev);
  }
  return max_dev;
}

double check_invariance(const RelativisedObservable& obs,
                        const ComplexMatrix& total_h) {
  std::vector<int> shifts(static_cast<std::size_t>(obs.reference_dim));
  std::iota(shifts.begin(), shifts.end(), 0);
  return check_invariance(obs, total_h, shifts);
}

ComplexMatrix pair_hamiltonian(const ComplexMatrix& h_lead,
                               const CyclicClock& clock_r) {
  require_hermitian(h_lead, "pair_hamiltonian");
  return kron(h_lead, identity(clock_r.dim())) +
         kron(identity(h_lead.rows()), clock_r.shift_generator());
}

double check_restriction_covariance(const CyclicClock& clock_c,
                                    const CyclicClock& clock_r,
                                    const DensityState& rho_r) {
  if (clock_c.ticks() != clock_r.ticks()) {
    throw DimensionError("check_restriction_covariance: tick counts differ");
  }
  const int d = clock_c.ticks();
  std::vector<ComplexMatrix> restricted;
  restricted.reserve(static_cast<std::size_t>(d));
  for (int n = 0; n < d; ++n) {
    restricted.push_back(
        restrict_reference(relativise_clock_povm(clock_c, clock_r, n), rho_r));
  }
  double max_dev = 0.0;
  for (int t = 0; t < d; ++t) {
    for (int n = 0; n < d; ++n) {
      const ComplexMatrix moved =
          shift_action(clock_c, restricted[static_cast<std::size_t>(n)], t);
      const double dev =
          (moved - restricted[static_cast<std::size_t>(mod_ticks(n - t, d))])
              .norm();
      max_dev = std::max(max_dev, dev);
    }
  }
  return max_dev;
}

double check_restriction_covariance(const ComplexMatrix& a,
                                    const ComplexMatrix& h_s,
                                    const CyclicClock& clock_r,
                                    const DensityState& rho_r) {
  const SpectralDecomposition eig = hermitian_eig(h_s);
  const ComplexMatrix base =
      restrict_reference(relativise_system(a, h_s, clock_r), rho_r);
  double max_dev = 0.0;
  for (int t = 0; t < clock_r.ticks(); ++t) {
    const ComplexMatrix lhs = heisenberg(base, eig, static_cast<double>(t));
    const ComplexMatrix rhs = restrict_reference(
        relativise_system(heisenberg(a, eig, static_cast<double>(t)), h_s,
                          clock_r),
        rho_r);
    max_dev = std::max(max_dev, (lhs - rhs).norm());
  }
  return max_dev;
}

double exchange_identity_check(const CyclicClock& clock_c,
                               const CyclicClock& clock_r) {
  if (clock_c.ticks() != clock_r.ticks()) {
    throw DimensionError("exchange_identity_check: tick counts differ");
  }
  const int d = clock_c.ticks();
  double max_dev = 0.0;
  for (int x = 0; x < d; ++x) {
    const ComplexMatrix lhs = relativise_clock_povm(clock_c, clock_r, x).matrix;
    ComplexMatrix rhs = ComplexMatrix::Zero(lhs.rows(), lhs.cols());
    for (int u = 0; u < d; ++u) {
      rhs += kron(clock_c.position_projector(u),
                  clock_r.position_projector(u - x));
    }
    max_dev = std::max(max_dev, (lhs - rhs).norm());
  }
  return max_dev;
}

}  // namespace chronon
