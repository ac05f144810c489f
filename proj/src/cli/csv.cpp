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

#include "cli/csv.hpp"

#include <cstdio>
#include <fstream>
#include <type_traits>

#include "chronon/errors.hpp"

namespace chronon::cli {
namespace {

template <typename T>
void append_optional(std::string& line, const std::optional<T>& value) {
  line.push_back(',');
  if (value.has_value()) {
    if constexpr (std::is_same_v<T, double>) {
      line += format_double(*value);
    } else {
      line += std::to_string(*value);
    }
  }
}

}  // namespace

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) {
    return field;
  }
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted.push_back('"');
    quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

std::string to_csv(const std::vector<ResultRow>& rows) {
  std::string out = kCsvHeader;
  out.push_back('\n');
  for (const ResultRow& row : rows) {
    std::string line = csv_escape(row.experiment);
    line.push_back(',');
    line += csv_escape(row.quantity);
    append_optional(line, row.d);
    append_optional(line, row.dim_s);
    append_optional(line, row.seed);
    append_optional(line, row.lambda);
    append_optional(line, row.s);
    append_optional(line, row.k);
    append_optional(line, row.n);
    line.push_back(',');
    line += format_double(row.computed);
    line.push_back(',');
    line += format_double(row.reference);
    line.push_back(',');
    line += format_double(row.abs_error);
    line.push_back('\n');
    out += line;
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content) {
  std::error_code ec;
  const std::filesystem::path dir = path.parent_path();
  if (!dir.empty()) {
    std::filesystem::create_directories(dir, ec);
    if (ec) {
      throw IoError("cannot create directory " + dir.string() + ": " +
                    ec.message());
    }
  }
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot open " + tmp.string() + " for writing");
    }
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    if (!out.flush()) {
      throw IoError("write to " + tmp.string() + " failed");
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw IoError("cannot rename " + tmp.string() + " to " + path.string() +
                  ": " + ec.message());
  }
}

}  // namespace chronon::cli
