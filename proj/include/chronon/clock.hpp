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

#include <vector>

#include "chronon/opalg.hpp"

namespace chronon {

// Euclidean remainder of value mod d, in [0, d).
int mod_ticks(int value, int d);

// A d-tick cyclic clock. Position states |n> are the standard basis;
// Fourier states are |f_m> = d^{-1/2} sum_n exp(2 pi i m n / d) |n>.
// The shift generator is
//
//   P = sum_m (2 pi m / d) |f_m><f_m|
//
// so that exp(i P k) |n> = |n - k mod d> with no residual phase: the
// shift unitary acts as the cyclic permutation that moves the pointer
// forward under exp(-i P k).
class CyclicClock {
 public:
  explicit CyclicClock(int ticks);

  // Deliberately miscalibrated clock whose generator drops the 2 pi / d
  // factor (P = sum_m m |f_m><f_m|). Its shifts permute nothing for
  // d > 2 pi; covariance checks against it must fail. Diagnostics only.
  static CyclicClock with_unscaled_generator(int ticks);

  int ticks() const { return d_; }
  Index dim() const { return d_; }

  // |n><n|, index taken mod d.
  const ComplexMatrix& position_projector(int n) const;
  ComplexVector position_vector(int n) const;

  // |f_m>, index taken mod d.
  const ComplexVector& fourier_vector(int m) const;
  ComplexMatrix fourier_projector(int m) const;

  const ComplexMatrix& shift_generator() const { return generator_; }

  // exp(i P k), assembled from the generator's spectral data. k may be
  // any real number; integer k permutes position states.
  ComplexMatrix shift_unitary(double k) const;

 private:
  CyclicClock(int ticks, bool unscaled);

  int d_;
  std::vector<ComplexMatrix> position_projectors_;
  std::vector<ComplexVector> fourier_vectors_;
  RealVector generator_eigenvalues_;
  ComplexMatrix generator_;
};

// exp(i P k) a exp(-i P k): the observable a shifted k ticks back.
ComplexMatrix shift_action(const CyclicClock& clock, const ComplexMatrix& a,
                           double k);

struct CovarianceReport {
  double max_deviation = 0.0;
  int worst_k = 0;
  int worst_n = 0;

  bool ok(double tol = kAtolExact) const { return max_deviation < tol; }
};

// Max Frobenius deviation of exp(i P k) |n><n| exp(-i P k) from
// |n - k><n - k| over all integer k and n.
CovarianceReport check_time_covariance(const CyclicClock& clock);

}  // namespace chronon
