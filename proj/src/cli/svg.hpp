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

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chronon::cli {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (x, y)
};

// A static line chart: axes, min/mid/max tick labels, one polyline per
// series, legend in the top-right corner. Log axes take log10 of the
// data; nonpositive values on a log axis are dropped from that series.
std::string line_chart(const std::string& title, const std::string& x_label,
                       const std::string& y_label,
                       std::span<const Series> series, bool log_x,
                       bool log_y);

}  // namespace chronon::cli
