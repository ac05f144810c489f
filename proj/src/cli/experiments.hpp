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

#include <iosfwd>

#include "cli/config.hpp"

namespace chronon::cli {

// Runs the configured experiment and writes results.csv, manifest.json,
// and (for the demo and sweep experiments) plot.svg under the output
// directory. Progress and the verdict go to log. Returns the process
// exit code: 0 when every tolerance check passes, 1 otherwise.
// Configuration and filesystem problems throw ConfigError and IoError.
int run_experiment(const ExperimentConfig& cfg, std::ostream& log);

}  // namespace chronon::cli
