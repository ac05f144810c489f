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

#include <complex>

#include <Eigen/Dense>

#include "chronon/errors.hpp"

namespace chronon {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;
using Index = Eigen::Index;

// Tolerance for identities that hold exactly in exact arithmetic.
inline constexpr double kAtolExact = 1e-10;
// Tolerance for trace and duality identities (tighter: no eigensolves).
inline constexpr double kAtolTrace = 1e-12;

// Eigensystem of a Hermitian matrix. Eigenvalues ascend; eigenvector
// columns are orthonormal and ordered to match.
struct SpectralDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

ComplexMatrix identity(Index dim);

// Standard basis column |n> in dimension dim.
ComplexVector basis_vector(Index dim, Index n);

// Rank-one projector |n><n|.
ComplexMatrix basis_projector(Index dim, Index n);

bool is_hermitian(const ComplexMatrix& a, double tol = kAtolExact);

void require_square(const ComplexMatrix& a, const char* what);
void require_hermitian(const ComplexMatrix& a, const char* what,
                       double tol = kAtolExact);

// Kronecker product. Result indices are row-major over (a, b): the
// composite index (i, k) maps to i * rows(b) + k.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   const ComplexMatrix& c);

ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

ComplexVector kron(const ComplexVector& a, const ComplexVector& b,
                   const ComplexVector& c);

// Lifts an operator on A (x) B to A (x) M (x) B with an identity on the
// middle factor of dimension dim_mid. dim_a * dim_b must equal x's size.
ComplexMatrix insert_middle_identity(const ComplexMatrix& x, Index dim_a,
                                     Index dim_mid, Index dim_b);

// Contracts the trailing factor of an operator on A (x) B against a
// weight operator on B:
//
//   out(i, j) = sum_{k, l} x((i,k), (j,l)) weight(l, k)
//
// i.e. each (i, j) block of x is traced against the weight. For a density
// weight this is the dual of a -> a (x) weight^T under the trace pairing.
ComplexMatrix weighted_partial_trace(const ComplexMatrix& x, Index dim_a,
                                     Index dim_b, const ComplexMatrix& weight);

// Throws NotHermitianError if h deviates from h^dagger by more than
// 1e-10 * max(1, ||h||_F).
SpectralDecomposition hermitian_eig(const ComplexMatrix& h);

// exp(-i h t) for Hermitian h.
ComplexMatrix evolve_unitary(const ComplexMatrix& h, double t);
ComplexMatrix evolve_unitary(const SpectralDecomposition& h, double t);

// Heisenberg picture: exp(i h t) a exp(-i h t).
ComplexMatrix heisenberg(const ComplexMatrix& a, const ComplexMatrix& h,
                         double t);
ComplexMatrix heisenberg(const ComplexMatrix& a, const SpectralDecomposition& h,
                         double t);

}  // namespace chronon
