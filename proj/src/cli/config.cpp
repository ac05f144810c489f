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

#include "cli/config.hpp"

#include <cmath>
#include <set>
#include <string>

#include "chronon/errors.hpp"

namespace chronon::cli {
namespace {

using nlohmann::json;

void require_known_keys(const json& obj, const std::string& where,
                        const std::set<std::string>& known) {
  for (const auto& item : obj.items()) {
    if (!known.contains(item.key())) {
      throw ConfigError("unknown key '" + item.key() + "' in " + where);
    }
  }
}

const json& require_object(const json& value, const std::string& where) {
  if (!value.is_object()) {
    throw ConfigError(where + " must be a JSON object");
  }
  return value;
}

std::string get_string(const json& obj, const std::string& key,
                       std::string fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_string()) {
    throw ConfigError("'" + key + "' must be a string");
  }
  return obj.at(key).get<std::string>();
}

int get_int(const json& obj, const std::string& key, int fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_number_integer()) {
    throw ConfigError("'" + key + "' must be an integer");
  }
  return obj.at(key).get<int>();
}

double get_finite(const json& value, const std::string& where) {
  if (!value.is_number()) {
    throw ConfigError(where + " must be a number");
  }
  const double v = value.get<double>();
  if (!std::isfinite(v)) {
    throw ConfigError(where + " must be finite");
  }
  return v;
}

std::vector<double> get_double_list(const json& value,
                                    const std::string& where) {
  if (!value.is_array() || value.empty()) {
    throw ConfigError(where + " must be a nonempty array of numbers");
  }
  std::vector<double> out;
  out.reserve(value.size());
  for (const auto& item : value) {
    out.push_back(get_finite(item, "entry of " + where));
  }
  return out;
}

// Matrices are arrays of rows; each entry is a [re, im] pair.
ComplexMatrix parse_matrix(const json& value, const std::string& where) {
  if (!value.is_array() || value.empty()) {
    throw ConfigError(where + " must be a nonempty array of rows");
  }
  const Index rows = static_cast<Index>(value.size());
  Index cols = -1;
  ComplexMatrix out;
  for (Index r = 0; r < rows; ++r) {
    const json& row = value[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.empty()) {
      throw ConfigError("row of " + where + " must be a nonempty array");
    }
    if (cols < 0) {
      cols = static_cast<Index>(row.size());
      out = ComplexMatrix::Zero(rows, cols);
    } else if (static_cast<Index>(row.size()) != cols) {
      throw ConfigError("ragged rows in " + where);
    }
    for (Index c = 0; c < cols; ++c) {
      const json& cell = row[static_cast<std::size_t>(c)];
      if (!cell.is_array() || cell.size() != 2) {
        throw ConfigError("entry of " + where + " must be a [re, im] pair");
      }
      out(r, c) = Complex(get_finite(cell[0], "re of " + where),
                          get_finite(cell[1], "im of " + where));
    }
  }
  return out;
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

HamiltonianSpec parse_hamiltonian(const json& value, int dim_s) {
  require_object(value, "'hamiltonian'");
  HamiltonianSpec spec;
  spec.kind = get_string(value, "kind", spec.kind);
  if (spec.kind == "random-hermitian") {
    require_known_keys(value, "'hamiltonian'", {"kind"});
  } else if (spec.kind == "diagonal") {
    require_known_keys(value, "'hamiltonian'", {"kind", "values"});
    if (!value.contains("values")) {
      throw ConfigError("diagonal hamiltonian requires 'values'");
    }
    spec.diagonal = get_double_list(value.at("values"),
                                    "'hamiltonian.values'");
    if (static_cast<int>(spec.diagonal.size()) != dim_s) {
      throw ConfigError("'hamiltonian.values' must have dim_s entries");
    }
  } else if (spec.kind == "explicit") {
    require_known_keys(value, "'hamiltonian'", {"kind", "matrix"});
    if (!value.contains("matrix")) {
      throw ConfigError("explicit hamiltonian requires 'matrix'");
    }
    spec.matrix = parse_matrix(value.at("matrix"), "'hamiltonian.matrix'");
    if (spec.matrix.rows() != spec.matrix.cols() ||
        spec.matrix.rows() != dim_s) {
      throw ConfigError("'hamiltonian.matrix' must be dim_s x dim_s");
    }
  } else {
    throw ConfigError("unknown hamiltonian kind '" + spec.kind + "'");
  }
  return spec;
}

PovmSpec parse_povm(const json& value, int dim_s) {
  require_object(value, "'povm'");
  PovmSpec spec;
  spec.kind = get_string(value, "kind", spec.kind);
  if (spec.kind == "sharp-basis") {
    require_known_keys(value, "'povm'", {"kind"});
  } else if (spec.kind == "random") {
    require_known_keys(value, "'povm'", {"kind", "n_outcomes"});
    spec.n_outcomes = get_int(value, "n_outcomes", spec.n_outcomes);
    if (spec.n_outcomes < 1) {
      throw ConfigError("'povm.n_outcomes' must be positive");
    }
  } else if (spec.kind == "explicit") {
    require_known_keys(value, "'povm'", {"kind", "effects"});
    if (!value.contains("effects") || !value.at("effects").is_array() ||
        value.at("effects").empty()) {
      throw ConfigError("explicit povm requires a nonempty 'effects' array");
    }
    for (const auto& item : value.at("effects")) {
      ComplexMatrix effect = parse_matrix(item, "'povm.effects' entry");
      if (effect.rows() != effect.cols() || effect.rows() != dim_s) {
        throw ConfigError("'povm.effects' entries must be dim_s x dim_s");
      }
      spec.effects.push_back(std::move(effect));
    }
  } else {
    throw ConfigError("unknown povm kind '" + spec.kind + "'");
  }
  return spec;
}

ReferenceSpec parse_reference(const json& value) {
  require_object(value, "'reference_state'");
  require_known_keys(value, "'reference_state'", {"kind", "index"});
  ReferenceSpec spec;
  spec.kind = get_string(value, "kind", spec.kind);
  if (spec.kind != "fourier" && spec.kind != "position") {
    throw ConfigError("unknown reference_state kind '" + spec.kind + "'");
  }
  spec.index = get_int(value, "index", spec.index);
  return spec;
}

ProfileSpec parse_profile(const json& value, const std::string& where,
                          ProfileSpec fallback) {
  require_object(value, where);
  require_known_keys(value, where, {"kind", "width", "center"});
  ProfileSpec spec = fallback;
  spec.kind = get_string(value, "kind", spec.kind);
  if (spec.kind != "gaussian" && spec.kind != "bump") {
    throw ConfigError("unknown profile kind '" + spec.kind + "' in " + where);
  }
  if (value.contains("width")) {
    spec.width = get_finite(value.at("width"), where + " width");
  }
  if (value.contains("center")) {
    spec.center = get_finite(value.at("center"), where + " center");
  }
  if (spec.width <= 0.0) {
    throw ConfigError(where + " width must be positive");
  }
  return spec;
}

json profile_to_json(const ProfileSpec& spec) {
  return {{"kind", spec.kind}, {"width", spec.width},
          {"center", spec.center}};
}

}  // namespace

ExperimentConfig parse_config(const json& doc) {
  require_object(doc, "configuration");
  require_known_keys(doc, "configuration",
                     {"experiment", "d", "dim_s", "seed", "hamiltonian",
                      "povm", "clock_state_index", "reference_state",
                      "lambda_grid", "profiles", "displacement_s",
                      "output_dir", "corrupt_clock"});

  ExperimentConfig cfg;
  cfg.experiment = get_string(doc, "experiment", cfg.experiment);
  if (cfg.experiment != "discrete-demo" && cfg.experiment != "kuchar" &&
      cfg.experiment != "continuum-sweep" && cfg.experiment != "validate") {
    throw ConfigError("unknown experiment '" + cfg.experiment + "'");
  }

  cfg.d = get_int(doc, "d", cfg.d);
  if (cfg.d < 2) throw ConfigError("'d' must be at least 2");
  cfg.dim_s = get_int(doc, "dim_s", cfg.dim_s);
  if (cfg.dim_s < 1) throw ConfigError("'dim_s' must be positive");

  if (doc.contains("seed")) {
    const json& seed = doc.at("seed");
    if (!seed.is_number_integer() || (seed.is_number_integer() &&
                                      !seed.is_number_unsigned() &&
                                      seed.get<std::int64_t>() < 0)) {
      throw ConfigError("'seed' must be a nonnegative integer");
    }
    cfg.seed = seed.get<std::uint64_t>();
  }

  if (doc.contains("hamiltonian")) {
    cfg.hamiltonian = parse_hamiltonian(doc.at("hamiltonian"), cfg.dim_s);
  }
  if (doc.contains("povm")) {
    cfg.povm = parse_povm(doc.at("povm"), cfg.dim_s);
  }
  cfg.clock_state_index = get_int(doc, "clock_state_index",
                                  cfg.clock_state_index);
  if (doc.contains("reference_state")) {
    cfg.reference_state = parse_reference(doc.at("reference_state"));
  }
  if (doc.contains("lambda_grid")) {
    cfg.lambda_grid = get_double_list(doc.at("lambda_grid"),
                                      "'lambda_grid'");
    for (double lambda : cfg.lambda_grid) {
      if (lambda <= 0.0) {
        throw ConfigError("'lambda_grid' entries must be positive");
      }
    }
  }
  if (doc.contains("profiles")) {
    const json& profiles = require_object(doc.at("profiles"), "'profiles'");
    require_known_keys(profiles, "'profiles'", {"f_c", "f_r", "h"});
    if (profiles.contains("f_c")) {
      cfg.f_c = parse_profile(profiles.at("f_c"), "'profiles.f_c'", cfg.f_c);
    }
    if (profiles.contains("f_r")) {
      cfg.f_r = parse_profile(profiles.at("f_r"), "'profiles.f_r'", cfg.f_r);
    }
    if (profiles.contains("h")) {
      cfg.window = parse_profile(profiles.at("h"), "'profiles.h'",
                                 cfg.window);
    }
  }
  if (doc.contains("displacement_s")) {
    cfg.displacement_s = get_double_list(doc.at("displacement_s"),
                                         "'displacement_s'");
  }
  cfg.output_dir = get_string(doc, "output_dir", cfg.output_dir);
  if (cfg.output_dir.empty()) {
    throw ConfigError("'output_dir' must be nonempty");
  }
  if (doc.contains("corrupt_clock")) {
    if (!doc.at("corrupt_clock").is_boolean()) {
      throw ConfigError("'corrupt_clock' must be a boolean");
    }
    cfg.corrupt_clock = doc.at("corrupt_clock").get<bool>();
  }
  return cfg;
}

json to_json(const ExperimentConfig& cfg) {
  json hamiltonian = {{"kind", cfg.hamiltonian.kind}};
  if (cfg.hamiltonian.kind == "diagonal") {
    hamiltonian["values"] = cfg.hamiltonian.diagonal;
  } else if (cfg.hamiltonian.kind == "explicit") {
    hamiltonian["matrix"] = matrix_to_json(cfg.hamiltonian.matrix);
  }

  json povm = {{"kind", cfg.povm.kind}};
  if (cfg.povm.kind == "random") {
    povm["n_outcomes"] = cfg.povm.n_outcomes;
  } else if (cfg.povm.kind == "explicit") {
    json effects = json::array();
    for (const ComplexMatrix& effect : cfg.povm.effects) {
      effects.push_back(matrix_to_json(effect));
    }
    povm["effects"] = std::move(effects);
  }

  return {{"experiment", cfg.experiment},
          {"d", cfg.d},
          {"dim_s", cfg.dim_s},
          {"seed", cfg.seed},
          {"hamiltonian", std::move(hamiltonian)},
          {"povm", std::move(povm)},
          {"clock_state_index", cfg.clock_state_index},
          {"reference_state",
           {{"kind", cfg.reference_state.kind},
            {"index", cfg.reference_state.index}}},
          {"lambda_grid", cfg.lambda_grid},
          {"profiles",
           {{"f_c", profile_to_json(cfg.f_c)},
            {"f_r", profile_to_json(cfg.f_r)},
            {"h", profile_to_json(cfg.window)}}},
          {"displacement_s", cfg.displacement_s},
          {"output_dir", cfg.output_dir},
          {"corrupt_clock", cfg.corrupt_clock}};
}

ComplexMatrix resolve_hamiltonian(const ExperimentConfig& cfg, Rng& rng) {
  if (cfg.hamiltonian.kind == "diagonal") {
    ComplexMatrix h = ComplexMatrix::Zero(cfg.dim_s, cfg.dim_s);
    for (int i = 0; i < cfg.dim_s; ++i) {
      h(i, i) = cfg.hamiltonian.diagonal[static_cast<std::size_t>(i)];
    }
    return h;
  }
  if (cfg.hamiltonian.kind == "explicit") {
    if (!is_hermitian(cfg.hamiltonian.matrix)) {
      throw NotHermitianError("explicit hamiltonian is not Hermitian");
    }
    return cfg.hamiltonian.matrix;
  }
  return random_hermitian(rng, cfg.dim_s);
}

Povm resolve_povm(const ExperimentConfig& cfg, Rng& rng) {
  if (cfg.povm.kind == "sharp-basis") {
    return Povm::sharp_basis(cfg.dim_s);
  }
  if (cfg.povm.kind == "explicit") {
    return Povm(cfg.povm.effects);
  }
  return random_povm(rng, cfg.dim_s, cfg.povm.n_outcomes);
}

Profile resolve_density(const ProfileSpec& spec) {
  if (spec.kind == "bump") {
    return Profile::bump(spec.width, spec.center);
  }
  return Profile::gaussian(spec.width, spec.center);
}

Profile resolve_window(const ProfileSpec& spec) {
  if (spec.kind == "bump") {
    return Profile::bump_window(spec.width, spec.center);
  }
  return Profile::gaussian_window(spec.width, spec.center);
}

}  // namespace chronon::cli
