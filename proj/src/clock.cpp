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

#include "chronon/clock.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace chronon {

int mod_ticks(int value, int d) {
  const int r = value % d;
  return r < 0 ? r + d : r;
}

CyclicClock::CyclicClock(int ticks) : CyclicClock(ticks, false) {}

CyclicClock CyclicClock::with_unscaled_generator(int ticks) {
  return CyclicClock(ticks, true);
}

CyclicClock::CyclicClock(int ticks, bool unscaled) : d_(ticks) {
  if (ticks < 2) {
    throw DimensionError("CyclicClock: need at least 2 ticks, got " +
                         std::to_string(ticks));
  }
  position_projectors_.reserve(static_cast<std::size_t>(d_));
  for (int n = 0; n < d_; ++n) {
    position_projectors_.push_back(basis_projector(d_, n));
  }

  const double base = 2.0 * std::numbers::pi / d_;
  fourier_vectors_.reserve(static_cast<std::size_t>(d_));
  generator_eigenvalues_ = RealVector(d_);
  generator_ = ComplexMatrix::Zero(d_, d_);
  const double root = 1.0 / std::sqrt(static_cast<double>(d_));
  for (int m = 0; m < d_; ++m) {
    ComplexVector f(d_);
    for (int n = 0; n < d_; ++n) {
      f(n) = root * std::exp(Complex(0.0, base * m * n));
    }
    fourier_vectors_.push_back(f);
    generator_eigenvalues_(m) = unscaled ? static_cast<double>(m) : base * m;
    generator_ += generator_eigenvalues_(m) * (f * f.adjoint());
  }
  generator_ = 0.5 * (generator_ + ComplexMatrix(generator_.adjoint()));
}

const ComplexMatrix& CyclicClock::position_projector(int n) const {
  return position_projectors_[static_cast<std::size_t>(mod_ticks(n, d_))];
}

ComplexVector CyclicClock::position_vector(int n) const {
  return basis_vector(d_, mod_ticks(n, d_));
}

const ComplexVector& CyclicClock::fourier_vector(int m) const {
  return fourier_vectors_[static_cast<std::size_t>(mod_ticks(m, d_))];
}

ComplexMatrix CyclicClock::fourier_projector(int m) const {
  const ComplexVector& f = fourier_vector(m);
  return f * f.adjoint();
}

ComplexMatrix CyclicClock::shift_unitary(double k) const {
  ComplexMatrix u = ComplexMatrix::Zero(d_, d_);
  for (int m = 0; m < d_; ++m) {
    const Complex phase = std::exp(Complex(0.0, generator_eigenvalues_(m) * k));
    const ComplexVector& f = fourier_vectors_[static_cast<std::size_t>(m)];
    u += phase * (f * f.adjoint());
  }
  return u;
}

ComplexMatrix shift_action(const CyclicClock& clock, const ComplexMatrix& a,
                           double k) {
  if (a.rows() != clock.dim() || a.cols() != clock.dim()) {
    throw DimensionError("shift_action: operand does not match clock space");
  }
  const ComplexMatrix u = clock.shift_unitary(k);
  return u * a * u.adjoint();
}

CovarianceReport check_time_covariance(const CyclicClock& clock) {
  CovarianceReport report;
  const int d = clock.ticks();
  for (int k = 0; k < d; ++k) {
    const ComplexMatrix u = clock.shift_unitary(k);
    for (int n = 0; n < d; ++n) {
      const ComplexMatrix moved =
          u * clock.position_projector(n) * u.adjoint();
      const double dev = (moved - clock.position_projector(n - k)).norm();
      if (dev > report.max_deviation) {
        report.max_deviation = dev;
        report.worst_k = k;
        report.worst_n = n;
      }
    }
  }
  return report;
}

}  // namespace chronon
