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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace chronon::cli {

// One measurement. Optional fields print as empty cells where the
// quantity has no such parameter.
struct ResultRow {
  std::string experiment;
  std::string quantity;
  std::optional<int> d;
  std::optional<int> dim_s;
  std::optional<std::uint64_t> seed;
  std::optional<double> lambda;
  std::optional<double> s;
  std::optional<int> k;
  std::optional<int> n;
  double computed = 0.0;
  double reference = 0.0;
  double abs_error = 0.0;
};

// Fixed column order. Kept in one place so the header, the writer, and
// the documentation cannot drift apart.
inline constexpr const char* kCsvHeader =
    "experiment,quantity,d,dim_s,seed,lambda,s,k,n,computed,reference,"
    "abs_error";

// Shortest representation holding 17 significant digits, enough to
// round-trip an IEEE double exactly.
std::string format_double(double value);

// RFC 4180: fields containing commas, quotes, or line breaks are
// quoted, with embedded quotes doubled.
std::string csv_escape(const std::string& field);

// Header row plus one line per result, "\n" line endings.
std::string to_csv(const std::vector<ResultRow>& rows);

// Writes via a temporary file in the same directory followed by an
// atomic rename. Throws IoError on any filesystem failure.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

}  // namespace chronon::cli
