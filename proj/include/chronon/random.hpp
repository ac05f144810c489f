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

#include <random>
#include <vector>

#include "chronon/quantum.hpp"

namespace chronon {

using Rng = std::mt19937_64;

// Entries are iid standard complex Gaussians.
ComplexMatrix random_complex_matrix(Rng& rng, Index rows, Index cols);

// (G + G^dagger) / 2 for a Gaussian G.
ComplexMatrix random_hermitian(Rng& rng, Index dim);

// Haar-ish unit vector: Gaussian entries, normalized.
ComplexVector random_state_vector(Rng& rng, Index dim);

// Random Hermitian generator whose flow exp(-i h t) is exactly
// period-periodic: eigenvalues are 2 pi j / period with random
// integers j in [-3, 3], eigenvectors from a random Hermitian.
// Needed whenever a Z_period shift action on the system is assumed.
ComplexMatrix random_periodic_hamiltonian(Rng& rng, Index dim, int period);

// G G^dagger normalized to unit trace (full rank almost surely).
DensityState random_density(Rng& rng, Index dim);

// n_outcomes effects E_i = S^{-1/2} G_i G_i^dagger S^{-1/2} with
// S = sum_i G_i G_i^dagger. Valid by construction; validated anyway.
Povm random_povm(Rng& rng, Index dim, int n_outcomes);

// count complex weights with squared moduli summing to one.
std::vector<Complex> random_amplitudes(Rng& rng, int count);

}  // namespace chronon
