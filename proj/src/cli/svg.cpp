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

#include "cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace chronon::cli {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 50.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b"};

std::string xml_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string num(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", v);
  return buffer;
}

std::string tick_label(double v, bool log_axis) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3g",
                log_axis ? std::pow(10.0, v) : v);
  return buffer;
}

}  // namespace

std::string line_chart(const std::string& title, const std::string& x_label,
                       const std::string& y_label,
                       std::span<const Series> series, bool log_x,
                       bool log_y) {
  // Transformed points per series, with axis-wide ranges.
  std::vector<std::vector<std::pair<double, double>>> data(series.size());
  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -x_min, y_min = x_min, y_max = -x_min;
  for (std::size_t i = 0; i < series.size(); ++i) {
    for (const auto& [px, py] : series[i].points) {
      if ((log_x && px <= 0.0) || (log_y && py <= 0.0)) continue;
      const double x = log_x ? std::log10(px) : px;
      const double y = log_y ? std::log10(py) : py;
      data[i].emplace_back(x, y);
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  if (!(x_min <= x_max)) {
    x_min = 0.0;
    x_max = 1.0;
    y_min = 0.0;
    y_max = 1.0;
  }
  if (x_max - x_min < 1e-12) {
    x_min -= 0.5;
    x_max += 0.5;
  }
  if (y_max - y_min < 1e-12) {
    y_min -= 0.5;
    y_max += 0.5;
  }

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto to_px = [&](double x) {
    return kMarginLeft + (x - x_min) / (x_max - x_min) * plot_w;
  };
  const auto to_py = [&](double y) {
    return kMarginTop + (y_max - y) / (y_max - y_min) * plot_h;
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
         "height=\"420\" viewBox=\"0 0 640 420\" font-family=\"sans-serif\" "
         "font-size=\"12\">\n";
  svg += "<rect width=\"640\" height=\"420\" fill=\"white\"/>\n";
  svg += "<text x=\"320\" y=\"22\" text-anchor=\"middle\" "
         "font-size=\"15\">" + xml_escape(title) + "</text>\n";

  // Axes.
  svg += "<line x1=\"" + num(kMarginLeft) + "\" y1=\"" +
         num(kMarginTop + plot_h) + "\" x2=\"" + num(kMarginLeft + plot_w) +
         "\" y2=\"" + num(kMarginTop + plot_h) +
         "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + num(kMarginLeft) + "\" y1=\"" + num(kMarginTop) +
         "\" x2=\"" + num(kMarginLeft) + "\" y2=\"" +
         num(kMarginTop + plot_h) + "\" stroke=\"black\"/>\n";

  // Min, mid, max tick labels on both axes.
  for (double frac : {0.0, 0.5, 1.0}) {
    const double xv = x_min + frac * (x_max - x_min);
    const double yv = y_min + frac * (y_max - y_min);
    svg += "<text x=\"" + num(to_px(xv)) + "\" y=\"" +
           num(kMarginTop + plot_h + 18.0) +
           "\" text-anchor=\"middle\">" + tick_label(xv, log_x) +
           "</text>\n";
    svg += "<text x=\"" + num(kMarginLeft - 8.0) + "\" y=\"" +
           num(to_py(yv) + 4.0) + "\" text-anchor=\"end\">" +
           tick_label(yv, log_y) + "</text>\n";
  }
  svg += "<text x=\"" + num(kMarginLeft + plot_w / 2.0) + "\" y=\"" +
         num(kHeight - 10.0) + "\" text-anchor=\"middle\">" +
         xml_escape(x_label) + "</text>\n";
  svg += "<text x=\"16\" y=\"" + num(kMarginTop + plot_h / 2.0) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         num(kMarginTop + plot_h / 2.0) + ")\">" + xml_escape(y_label) +
         "</text>\n";

  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data[i].empty()) continue;
    const char* color = kPalette[i % std::size(kPalette)];
    std::string points;
    for (const auto& [x, y] : data[i]) {
      points += num(to_px(x)) + "," + num(to_py(y)) + " ";
    }
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
    const double ly = kMarginTop + 14.0 * static_cast<double>(i);
    svg += "<line x1=\"" + num(kMarginLeft + plot_w - 120.0) + "\" y1=\"" +
           num(ly) + "\" x2=\"" + num(kMarginLeft + plot_w - 100.0) +
           "\" y2=\"" + num(ly) + "\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"1.5\"/>\n";
    svg += "<text x=\"" + num(kMarginLeft + plot_w - 94.0) + "\" y=\"" +
           num(ly + 4.0) + "\">" + xml_escape(series[i].label) +
           "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace chronon::cli
