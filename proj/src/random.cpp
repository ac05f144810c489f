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

#include "chronon/random.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace chronon {

ComplexMatrix random_complex_matrix(Rng& rng, Index rows, Index cols) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

ComplexMatrix random_hermitian(Rng& rng, Index dim) {
  const ComplexMatrix g = random_complex_matrix(rng, dim, dim);
  return 0.5 * (g + g.adjoint());
}

ComplexVector random_state_vector(Rng& rng, Index dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(dim);
  for (Index i = 0; i < dim; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v(i) = Complex(re, im);
  }
  return v / v.norm();
}

ComplexMatrix random_periodic_hamiltonian(Rng& rng, Index dim, int period) {
  if (period < 1) {
    throw DimensionError("random_periodic_hamiltonian: period must be >= 1");
  }
  const SpectralDecomposition basis = hermitian_eig(random_hermitian(rng, dim));
  std::uniform_int_distribution<int> level(-3, 3);
  RealVector energies(dim);
  for (Index i = 0; i < dim; ++i) {
    energies(i) = 2.0 * std::numbers::pi * level(rng) / period;
  }
  ComplexMatrix h = basis.eigenvectors *
                    energies.cast<Complex>().asDiagonal() *
                    basis.eigenvectors.adjoint();
  return 0.5 * (h + ComplexMatrix(h.adjoint()));
}

DensityState random_density(Rng& rng, Index dim) {
  const ComplexMatrix g = random_complex_matrix(rng, dim, dim);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  // Symmetrize away the last bits of rounding so validation is clean.
  rho = 0.5 * (rho + ComplexMatrix(rho.adjoint()));
  return validate_state(rho);
}

Povm random_povm(Rng& rng, Index dim, int n_outcomes) {
  if (n_outcomes < 1) {
    throw DimensionError("random_povm: need at least one outcome");
  }
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(static_cast<std::size_t>(n_outcomes));
  ComplexMatrix s = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < n_outcomes; ++i) {
    const ComplexMatrix g = random_complex_matrix(rng, dim, dim);
    blocks.push_back(g * g.adjoint());
    s += blocks.back();
  }
  const SpectralDecomposition eig = hermitian_eig(0.5 * (s + ComplexMatrix(s.adjoint())));
  RealVector inv_sqrt(eig.eigenvalues.size());
  for (Index i = 0; i < eig.eigenvalues.size(); ++i) {
    inv_sqrt(i) = 1.0 / std::sqrt(eig.eigenvalues(i));
  }
  const ComplexMatrix s_inv_sqrt = eig.eigenvectors *
                                   inv_sqrt.cast<Complex>().asDiagonal() *
                                   eig.eigenvectors.adjoint();
  std::vector<ComplexMatrix> effects;
  effects.reserve(blocks.size());
  for (const ComplexMatrix& b : blocks) {
    ComplexMatrix e = s_inv_sqrt * b * s_inv_sqrt;
    effects.push_back(0.5 * (e + ComplexMatrix(e.adjoint())));
  }
  return Povm(std::move(effects));
}

std::vector<Complex> random_amplitudes(Rng& rng, int count) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> lambdas(static_cast<std::size_t>(count));
  double norm_sq = 0.0;
  for (Complex& l : lambdas) {
    l = Complex(gauss(rng), gauss(rng));
    norm_sq += std::norm(l);
  }
  const double norm = std::sqrt(norm_sq);
  for (Complex& l : lambdas) l /= norm;
  return lambdas;
}

}  // namespace chronon
