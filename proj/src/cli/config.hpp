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

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "chronon/continuum.hpp"
#include "chronon/opalg.hpp"
#include "chronon/quantum.hpp"
#include "chronon/random.hpp"

namespace chronon::cli {

// System dynamics selector: a seeded random Hermitian matrix, an
// explicit diagonal (energy list), or a full explicit matrix.
struct HamiltonianSpec {
  std::string kind = "random-hermitian";
  std::vector<double> diagonal;  // kind == "diagonal"
  ComplexMatrix matrix;          // kind == "explicit"
};

// System observable selector.
struct PovmSpec {
  std::string kind = "random";  // "sharp-basis" | "random" | "explicit"
  int n_outcomes = 3;           // kind == "random"
  std::vector<ComplexMatrix> effects;  // kind == "explicit"
};

// Reference clock preparation: a Fourier or a position basis vector.
struct ReferenceSpec {
  std::string kind = "fourier";
  int index = 0;
};

// Shape of one continuum profile. Densities integrate to one; the
// window peaks at one.
struct ProfileSpec {
  std::string kind = "gaussian";  // "gaussian" | "bump"
  double width = 1.0;
  double center = 0.0;
};

// One experiment run, fully resolved. Every field has a documented
// default so an empty JSON document is a valid configuration.
struct ExperimentConfig {
  std::string experiment = "validate";
  int d = 8;
  int dim_s = 2;
  std::uint64_t seed = 0;
  HamiltonianSpec hamiltonian;
  PovmSpec povm;
  int clock_state_index = 0;
  ReferenceSpec reference_state;
  std::vector<double> lambda_grid = {1, 2, 4, 8, 16, 32, 64};
  ProfileSpec f_c{"gaussian", 0.05, 0.0};
  ProfileSpec f_r{"gaussian", 1.0, 0.0};
  ProfileSpec window{"gaussian", 0.1, 0.0};
  std::vector<double> displacement_s = {0.5};
  std::string output_dir = "out";
  bool corrupt_clock = false;
};

// Parses and validates a configuration document. Unknown keys at any
// level, wrong types, and out-of-range values throw ConfigError.
ExperimentConfig parse_config(const nlohmann::json& doc);

// Full resolved configuration, re-parseable by parse_config. Written
// verbatim as manifest.json.
nlohmann::json to_json(const ExperimentConfig& cfg);

// Materialize the configured objects. Random selections draw from rng.
ComplexMatrix resolve_hamiltonian(const ExperimentConfig& cfg, Rng& rng);
Povm resolve_povm(const ExperimentConfig& cfg, Rng& rng);
Profile resolve_density(const ProfileSpec& spec);
Profile resolve_window(const ProfileSpec& spec);

}  // namespace chronon::cli
