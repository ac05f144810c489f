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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <numbers>
#include <random>

#include "chronon/opalg.hpp"
#include "chronon/random.hpp"

using namespace chronon;

namespace {

// Independent reference for the Kronecker product: entry-by-entry index
// arithmetic, no blocking.
ComplexMatrix naive_kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      for (Index k = 0; k < b.rows(); ++k) {
        for (Index l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix pauli_x() {
  ComplexMatrix x(2, 2);
  x << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
  return x;
}

ComplexMatrix pauli_y() {
  ComplexMatrix y(2, 2);
  y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return y;
}

ComplexMatrix pauli_z() {
  ComplexMatrix z(2, 2);
  z << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
  return z;
}

}  // namespace

TEST_CASE("kron matches the entry-by-entry reference") {
  Rng rng(12345);
  for (const auto [da, db] : {std::pair{2, 3}, {3, 2}, {4, 4}, {1, 5}}) {
    const ComplexMatrix a = random_complex_matrix(rng, da, da);
    const ComplexMatrix b = random_complex_matrix(rng, db, db);
    CHECK((kron(a, b) - naive_kron(a, b)).norm() == 0.0);
  }
}

TEST_CASE("kron of basis projectors places a single unit entry") {
  const ComplexMatrix p = kron(basis_projector(2, 0), basis_projector(2, 1));
  CHECK(p.rows() == 4);
  CHECK(std::abs(p(1, 1) - Complex(1, 0)) == 0.0);
  CHECK(std::abs(p.sum() - Complex(1, 0)) == 0.0);
}

TEST_CASE("kron is associative, exactly on integer matrices") {
  ComplexMatrix a(2, 2), b(2, 2), c(2, 2);
  a << 1, 2, 3, 4;
  b << 5, -6, 7, 8;
  c << -9, 10, 11, 12;
  CHECK((kron(kron(a, b), c) - kron(a, kron(b, c))).norm() == 0.0);
  CHECK((kron(a, b, c) - kron(a, kron(b, c))).norm() == 0.0);
}

TEST_CASE("vector kron is compatible with the matrix product") {
  Rng rng(777);
  const ComplexVector u = random_state_vector(rng, 3);
  const ComplexVector v = random_state_vector(rng, 4);
  const ComplexVector w = kron(u, v);
  const ComplexMatrix lhs = w * w.adjoint();
  const ComplexMatrix rhs = kron(ComplexMatrix(u * u.adjoint()),
                                 ComplexMatrix(v * v.adjoint()));
  CHECK((lhs - rhs).norm() < 1e-14);
}

TEST_CASE("insert_middle_identity agrees with an explicit triple product") {
  Rng rng(31);
  const ComplexMatrix a = random_complex_matrix(rng, 2, 2);
  const ComplexMatrix b = random_complex_matrix(rng, 3, 3);
  const ComplexMatrix x = kron(a, b);
  const ComplexMatrix lifted = insert_middle_identity(x, 2, 4, 3);
  CHECK((lifted - kron(a, identity(4), b)).norm() == 0.0);
}

TEST_CASE("insert_middle_identity rejects a bad factorization") {
  Rng rng(32);
  const ComplexMatrix x = random_complex_matrix(rng, 6, 6);
  CHECK_THROWS_AS(insert_middle_identity(x, 4, 2, 2), DimensionError);
}

TEST_CASE("weighted_partial_trace satisfies the trace-pairing duality") {
  // tr[G(x) sigma] = tr[x (sigma (x) w)] for every sigma: both sides
  // computed by independent contractions.
  Rng rng(2024);
  const Index da = 3, db = 4;
  const ComplexMatrix x = random_complex_matrix(rng, da * db, da * db);
  const ComplexMatrix w = random_complex_matrix(rng, db, db);
  const ComplexMatrix g = weighted_partial_trace(x, da, db, w);
  for (int rep = 0; rep < 5; ++rep) {
    const ComplexMatrix sigma = random_complex_matrix(rng, da, da);
    const Complex lhs = (g * sigma).trace();
    const Complex rhs = (x * kron(sigma, w)).trace();
    CHECK(std::abs(lhs - rhs) <
          kAtolTrace * x.norm() * w.norm() * sigma.norm());
  }
}

TEST_CASE("weighted_partial_trace of a product factorizes") {
  Rng rng(99);
  const ComplexMatrix a = random_complex_matrix(rng, 3, 3);
  const ComplexMatrix b = random_complex_matrix(rng, 2, 2);
  const ComplexMatrix w = random_complex_matrix(rng, 2, 2);
  const ComplexMatrix g = weighted_partial_trace(kron(a, b), 3, 2, w);
  const Complex scale = (b * w).trace();
  CHECK((g - scale * a).norm() < 1e-13 * a.norm() * b.norm() * w.norm());
}

TEST_CASE("hermitian_eig reconstructs and orders") {
  Rng rng(5150);
  const ComplexMatrix h = random_hermitian(rng, 6);
  const SpectralDecomposition eig = hermitian_eig(h);
  const ComplexMatrix rebuilt = eig.eigenvectors *
                                eig.eigenvalues.cast<Complex>().asDiagonal() *
                                eig.eigenvectors.adjoint();
  CHECK((rebuilt - h).norm() < 1e-12 * std::max(1.0, h.norm()));
  for (Index i = 0; i + 1 < eig.eigenvalues.size(); ++i) {
    CHECK(eig.eigenvalues(i) <= eig.eigenvalues(i + 1));
  }
  CHECK((eig.eigenvectors.adjoint() * eig.eigenvectors - identity(6)).norm() <
        1e-12);
}

TEST_CASE("hermitian_eig hand values") {
  const SpectralDecomposition x = hermitian_eig(pauli_x());
  CHECK(x.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(x.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-14));

  ComplexMatrix d(2, 2);
  d << Complex(2, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
  const SpectralDecomposition e = hermitian_eig(d);
  CHECK(e.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(e.eigenvalues(1) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  Rng rng(8);
  const ComplexMatrix g = random_complex_matrix(rng, 4, 4);
  CHECK_THROWS_AS(hermitian_eig(g), NotHermitianError);
}

TEST_CASE("evolve_unitary is a one-parameter group") {
  Rng rng(62);
  const ComplexMatrix h = random_hermitian(rng, 5);
  const ComplexMatrix u0 = evolve_unitary(h, 0.0);
  CHECK((u0 - identity(5)).norm() < 1e-13);
  for (const auto [s, t] : {std::pair{0.3, 1.7}, {-0.9, 2.4}}) {
    const ComplexMatrix us = evolve_unitary(h, s);
    const ComplexMatrix ut = evolve_unitary(h, t);
    const ComplexMatrix ust = evolve_unitary(h, s + t);
    CHECK((us * ut - ust).norm() < kAtolExact);
    CHECK((us.adjoint() * us - identity(5)).norm() < kAtolExact);
  }
}

TEST_CASE("evolve_unitary hand value at a quarter period") {
  const ComplexMatrix u = evolve_unitary(pauli_z(), std::numbers::pi / 2);
  ComplexMatrix expected(2, 2);
  expected << Complex(0, -1), Complex(0, 0), Complex(0, 0), Complex(0, 1);
  CHECK((u - expected).norm() < 1e-14);
}

TEST_CASE("heisenberg rotates pauli-x into pauli-y") {
  for (const double t : {0.0, 0.4, 1.1, -2.0}) {
    const ComplexMatrix moved = heisenberg(pauli_x(), pauli_z(), t);
    const ComplexMatrix expected =
        std::cos(2 * t) * pauli_x() - std::sin(2 * t) * pauli_y();
    CHECK((moved - expected).norm() < 1e-13);
  }
}

TEST_CASE("heisenberg composes along the flow") {
  Rng rng(404);
  const ComplexMatrix h = random_hermitian(rng, 4);
  const ComplexMatrix a = random_hermitian(rng, 4);
  const ComplexMatrix two_step = heisenberg(heisenberg(a, h, 0.7), h, 0.5);
  CHECK((two_step - heisenberg(a, h, 1.2)).norm() < kAtolExact);
}

TEST_CASE("heisenberg requires matching dimensions") {
  Rng rng(7);
  const ComplexMatrix h = random_hermitian(rng, 3);
  const ComplexMatrix a = random_hermitian(rng, 4);
  CHECK_THROWS_AS(heisenberg(a, h, 1.0), DimensionError);
}

TEST_CASE("basis_vector range checks") {
  CHECK_THROWS_AS(basis_vector(3, 3), DimensionError);
  CHECK_THROWS_AS(basis_vector(3, -1), DimensionError);
  CHECK(std::abs(basis_vector(3, 2)(2) - Complex(1, 0)) == 0.0);
}
