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

#include "chronon/opalg.hpp"

#include <algorithm>
#include <string>

namespace chronon {

ComplexMatrix identity(Index dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexVector basis_vector(Index dim, Index n) {
  if (n < 0 || n >= dim) {
    throw DimensionError("basis_vector: index " + std::to_string(n) +
                         " out of range for dimension " + std::to_string(dim));
  }
  ComplexVector v = ComplexVector::Zero(dim);
  v(n) = Complex(1.0, 0.0);
  return v;
}

ComplexMatrix basis_projector(Index dim, Index n) {
  ComplexVector v = basis_vector(dim, n);
  return v * v.adjoint();
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  const double scale = std::max(1.0, a.norm());
  return (a - a.adjoint()).norm() < tol * scale;
}

void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() != a.cols()) {
    throw DimensionError(std::string(what) + ": matrix is " +
                         std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", expected square");
  }
}

void require_hermitian(const ComplexMatrix& a, const char* what, double tol) {
  require_square(a, what);
  if (!is_hermitian(a, tol)) {
    throw NotHermitianError(std::string(what) + ": matrix is not Hermitian");
  }
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Index ra = a.rows(), ca = a.cols();
  const Index rb = b.rows(), cb = b.cols();
  ComplexMatrix out = ComplexMatrix::Zero(ra * rb, ca * cb);
  for (Index i = 0; i < ra; ++i) {
    for (Index j = 0; j < ca; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      out.block(i * rb, j * cb, rb, cb) = aij * b;
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   const ComplexMatrix& c) {
  return kron(kron(a, b), c);
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b,
                   const ComplexVector& c) {
  return kron(kron(a, b), c);
}

ComplexMatrix insert_middle_identity(const ComplexMatrix& x, Index dim_a,
                                     Index dim_mid, Index dim_b) {
  require_square(x, "insert_middle_identity");
  if (dim_a * dim_b != x.rows()) {
    throw DimensionError(
        "insert_middle_identity: dim_a * dim_b = " +
        std::to_string(dim_a * dim_b) + " does not match operand size " +
        std::to_string(x.rows()));
  }
  const Index dim = dim_a * dim_mid * dim_b;
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (Index i = 0; i < dim_a; ++i) {
    for (Index j = 0; j < dim_a; ++j) {
      for (Index m = 0; m < dim_mid; ++m) {
        out.block((i * dim_mid + m) * dim_b, (j * dim_mid + m) * dim_b, dim_b,
                  dim_b) = x.block(i * dim_b, j * dim_b, dim_b, dim_b);
      }
    }
  }
  return out;
}

ComplexMatrix weighted_partial_trace(const ComplexMatrix& x, Index dim_a,
                                     Index dim_b,
                                     const ComplexMatrix& weight) {
  require_square(x, "weighted_partial_trace");
  require_square(weight, "weighted_partial_trace");
  if (dim_a * dim_b != x.rows()) {
    throw DimensionError(
        "weighted_partial_trace: dim_a * dim_b = " +
        std::to_string(dim_a * dim_b) + " does not match operand size " +
        std::to_string(x.rows()));
  }
  if (weight.rows() != dim_b) {
    throw DimensionError("weighted_partial_trace: weight is " +
                         std::to_string(weight.rows()) +
                         "-dimensional, expected " + std::to_string(dim_b));
  }
  // tr[block * weight] = sum_{k,l} block(k, l) weight(l, k).
  const ComplexMatrix wt = weight.transpose();
  ComplexMatrix out(dim_a, dim_a);
  for (Index i = 0; i < dim_a; ++i) {
    for (Index j = 0; j < dim_a; ++j) {
      out(i, j) =
          x.block(i * dim_b, j * dim_b, dim_b, dim_b).cwiseProduct(wt).sum();
    }
  }
  return out;
}

SpectralDecomposition hermitian_eig(const ComplexMatrix& h) {
  require_hermitian(h, "hermitian_eig");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian_eig: eigensolver did not converge");
  }
  return SpectralDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix evolve_unitary(const SpectralDecomposition& h, double t) {
  const Index dim = h.eigenvalues.size();
  ComplexVector phases(dim);
  for (Index i = 0; i < dim; ++i) {
    phases(i) = std::exp(Complex(0.0, -h.eigenvalues(i) * t));
  }
  return h.eigenvectors * phases.asDiagonal() * h.eigenvectors.adjoint();
}

ComplexMatrix evolve_unitary(const ComplexMatrix& h, double t) {
  return evolve_unitary(hermitian_eig(h), t);
}

ComplexMatrix heisenberg(const ComplexMatrix& a, const SpectralDecomposition& h,
                         double t) {
  if (a.rows() != h.eigenvalues.size() || a.cols() != h.eigenvalues.size()) {
    throw DimensionError("heisenberg: observable and generator sizes differ");
  }
  const ComplexMatrix u = evolve_unitary(h, t);
  return u.adjoint() * a * u;
}

ComplexMatrix heisenberg(const ComplexMatrix& a, const ComplexMatrix& h,
                         double t) {
  return heisenberg(a, hermitian_eig(h), t);
}

}  // namespace chronon
