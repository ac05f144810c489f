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

#include "chronon/pw_engine.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace chronon {

JointObservable::JointObservable(const Povm& system_povm,
                                 const ComplexMatrix& h_s,
                                 const CyclicClock& clock_c,
                                 const CyclicClock& clock_r)
    : d_(clock_c.ticks()), povm_(system_povm) {
  if (clock_c.ticks() != clock_r.ticks()) {
    throw DimensionError("joint_observable: tick counts differ");
  }
  require_hermitian(h_s, "joint_observable generator");
  if (h_s.rows() != povm_.dim()) {
    throw DimensionError(
        "joint_observable: generator does not match system effects");
  }
  const SpectralDecomposition eig = hermitian_eig(h_s);
  evolved_.resize(povm_.size());
  for (std::size_t k = 0; k < povm_.size(); ++k) {
    evolved_[k].reserve(static_cast<std::size_t>(2 * d_ - 1));
    for (int t = -(d_ - 1); t <= d_ - 1; ++t) {
      evolved_[k].push_back(
          heisenberg(povm_.effect(k), eig, static_cast<double>(t)));
    }
  }
}

const ComplexMatrix& JointObservable::alpha_effect(std::size_t k,
                                                   int t) const {
  if (t <= -d_ || t >= d_) {
    throw DimensionError("alpha_effect: parameter outside (-d, d)");
  }
  return evolved_[k][static_cast<std::size_t>(t + d_ - 1)];
}

ComplexMatrix JointObservable::entry(std::size_t k, int n) const {
  const Index ds = system_dim();
  ComplexMatrix out = ComplexMatrix::Zero(total_dim(), total_dim());
  for (int j = 0; j < d_; ++j) {
    const ComplexMatrix& eff = alpha_effect(k, n - j);
    const Index r = mod_ticks(j - n, d_);
    for (Index s = 0; s < ds; ++s) {
      for (Index t = 0; t < ds; ++t) {
        out(s * d_ * d_ + j * d_ + r, t * d_ * d_ + j * d_ + r) = eff(s, t);
      }
    }
  }
  return out;
}

JointDistribution joint_probability(const JointObservable& m,
                                    const DensityState& rho) {
  if (rho.dim() != m.total_dim()) {
    throw DimensionError("joint_probability: state dimension " +
                         std::to_string(rho.dim()) + " does not match " +
                         std::to_string(m.total_dim()));
  }
  const int d = m.clock_ticks();
  const Index ds = m.system_dim();
  const ComplexMatrix& r = rho.matrix();
  JointDistribution dist;
  dist.joint = RealMatrix::Zero(static_cast<Index>(m.outcome_count()), d);
  dist.time_marginal = RealVector::Zero(d);
  double total = 0.0;
  for (std::size_t k = 0; k < m.outcome_count(); ++k) {
    for (int n = 0; n < d; ++n) {
      Complex p(0.0, 0.0);
      for (int j = 0; j < d; ++j) {
        const ComplexMatrix& eff = m.alpha_effect(k, n - j);
        const Index rr = mod_ticks(j - n, d);
        // tr[rho_block eff] over the system factor at cell (j, rr).
        for (Index s = 0; s < ds; ++s) {
          for (Index t = 0; t < ds; ++t) {
            p += r(s * d * d + j * d + rr, t * d * d + j * d + rr) * eff(t, s);
          }
        }
      }
      const double val = p.real();
      if (val < -1e-12) {
        throw Error("joint_probability: negative weight " +
                    std::to_string(val));
      }
      dist.joint(static_cast<Index>(k), n) = val;
      dist.time_marginal(n) += val;
      total += val;
    }
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw Error("joint_probability: total weight deviates from 1 by " +
                std::to_string(std::abs(total - 1.0)));
  }
  return dist;
}

ConditionalTable conditional(const JointDistribution& dist, double threshold) {
  ConditionalTable table;
  const Index rows = dist.joint.rows();
  const Index cols = dist.joint.cols();
  table.conditional = RealMatrix::Constant(
      rows, cols, std::numeric_limits<double>::quiet_NaN());
  table.defined.assign(static_cast<std::size_t>(cols), false);
  bool any = false;
  for (Index n = 0; n < cols; ++n) {
    if (dist.time_marginal(n) <= threshold) continue;
    table.defined[static_cast<std::size_t>(n)] = true;
    any = true;
    table.conditional.col(n) = dist.joint.col(n) / dist.time_marginal(n);
    const double colsum = table.conditional.col(n).sum();
    if (std::abs(colsum - 1.0) > 1e-10) {
      throw Error("conditional: column " + std::to_string(n) +
                  " sums to " + std::to_string(colsum));
    }
  }
  if (!any) {
    throw AllMarginalsZeroError(
        "conditional: every time marginal is below threshold");
  }
  return table;
}

ComplexVector entangled_state(std::span<const Complex> lambdas,
                              const ComplexMatrix& h_s,
                              const CyclicClock& clock_c,
                              const CyclicClock& clock_r,
                              const ComplexVector& psi_s,
                              const ComplexVector& xi) {
  const int d = clock_c.ticks();
  if (clock_r.ticks() != d) {
    throw DimensionError("entangled_state: tick counts differ");
  }
  if (static_cast<int>(lambdas.size()) != d) {
    throw DimensionError("entangled_state: need one weight per tick");
  }
  require_hermitian(h_s, "entangled_state generator");
  if (h_s.rows() != psi_s.size()) {
    throw DimensionError("entangled_state: system vector size mismatch");
  }
  if (xi.size() != d) {
    throw DimensionError("entangled_state: reference vector size mismatch");
  }
  double weight = 0.0;
  for (const Complex& l : lambdas) weight += std::norm(l);
  if (std::abs(weight - 1.0) > 1e-10) {
    throw NotNormalizedError("entangled_state: weights have total " +
                             std::to_string(weight));
  }
  if (std::abs(psi_s.norm() - 1.0) > 1e-10) {
    throw NotNormalizedError("entangled_state: system vector not normalized");
  }
  if (std::abs(xi.norm() - 1.0) > 1e-10) {
    throw NotNormalizedError("entangled_state: reference vector not "
                             "normalized");
  }
  const SpectralDecomposition eig = hermitian_eig(h_s);
  ComplexVector out = ComplexVector::Zero(psi_s.size() * d * d);
  for (int l = 0; l < d; ++l) {
    const ComplexVector sys = evolve_unitary(eig, static_cast<double>(l)) *
                              psi_s;
    const ComplexVector ref =
        clock_r.shift_unitary(-static_cast<double>(l)) * xi;
    out += lambdas[static_cast<std::size_t>(l)] *
           kron(sys, clock_c.position_vector(l), ref);
  }
  return out;
}

double distance_to_scalar(const ComplexMatrix& a) {
  require_square(a, "distance_to_scalar");
  const Complex c = a.trace() / static_cast<double>(a.rows());
  return (a - c * identity(a.rows())).norm();
}

KucharReport kuchar_average(const ComplexMatrix& a, const CyclicClock& clock) {
  require_square(a, "kuchar_average");
  if (a.rows() != clock.dim()) {
    throw DimensionError("kuchar_average: observable is not on the clock space");
  }
  const int d = clock.ticks();
  KucharReport report;
  report.average = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    report.average += shift_action(clock, a, k);
  }
  report.average /= static_cast<double>(d);
  report.distance_to_scalar = distance_to_scalar(report.average);
  return report;
}

ComplexMatrix total_hamiltonian(const ComplexMatrix& h_s,
                                const CyclicClock& clock_c,
                                const CyclicClock& clock_r) {
  require_hermitian(h_s, "total_hamiltonian");
  const Index ds = h_s.rows();
  return kron(h_s, identity(clock_c.dim()), identity(clock_r.dim())) +
         kron(identity(ds), clock_c.shift_generator(), identity(clock_r.dim())) +
         kron(identity(ds), identity(clock_c.dim()), clock_r.shift_generator());
}

}  // namespace chronon
