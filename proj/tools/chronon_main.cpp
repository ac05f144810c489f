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

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "chronon/errors.hpp"
#include "cli/config.hpp"
#include "cli/experiments.hpp"

namespace {

// Exit codes: 0 success, 1 tolerance failure, 2 configuration error,
// 3 I/O error.
constexpr int kExitTolerance = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chronon: cyclic-clock and continuum experiment runner"};
  std::string experiment;
  app.add_option("experiment", experiment,
                 "discrete-demo | kuchar | continuum-sweep | validate")
      ->required();
  std::string config_path;
  app.add_option("--config", config_path, "JSON configuration file");
  std::string out_dir;
  app.add_option("--out", out_dir, "output directory");
  std::uint64_t seed = 0;
  auto* seed_opt = app.add_option("--seed", seed, "random seed override");
  bool corrupt_clock = false;
  app.add_flag("--corrupt-clock", corrupt_clock,
               "debug: run validate against a miscalibrated clock "
               "generator");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    nlohmann::json doc = nlohmann::json::object();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        throw chronon::IoError("cannot open config file " + config_path);
      }
      try {
        doc = nlohmann::json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        throw chronon::ConfigError(std::string("config is not valid JSON: ") +
                                   e.what());
      }
    }
    chronon::cli::ExperimentConfig cfg = chronon::cli::parse_config(doc);

    // Command-line flags override document keys; the environment
    // supplies the output directory when no flag does.
    cfg.experiment = experiment;
    if (seed_opt->count() > 0) cfg.seed = seed;
    if (!out_dir.empty()) {
      cfg.output_dir = out_dir;
    } else if (const char* env_out = std::getenv("CHRONON_OUT")) {
      if (*env_out != '\0') cfg.output_dir = env_out;
    }
    if (corrupt_clock) cfg.corrupt_clock = true;
    if (cfg.experiment != "discrete-demo" && cfg.experiment != "kuchar" &&
        cfg.experiment != "continuum-sweep" &&
        cfg.experiment != "validate") {
      throw chronon::ConfigError("unknown experiment '" + cfg.experiment +
                                 "'");
    }

    return chronon::cli::run_experiment(cfg, std::cout);
  } catch (const chronon::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const chronon::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTolerance;
  }
}
