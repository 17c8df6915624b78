// Copyright 2026 The CWBound Authors.
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

#include "cwbound/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "cwbound/error.hpp"
#include "cwbound/topology_io.hpp"

namespace cwbound {

namespace {

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(std::span<const Point2> positions,
                       std::span<const Edge> edges,
                       const std::vector<bool>& predicted,
                       const std::vector<bool>& truth) {
  const std::size_t n = positions.size();
  if ((!predicted.empty() && predicted.size() != n) ||
      (!truth.empty() && truth.size() != n)) {
    throw Error(ErrorCode::kInvalidArgument, "flag vectors must match node count");
  }
  double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
  if (n > 0) {
    min_x = max_x = positions[0].x;
    min_y = max_y = positions[0].y;
    for (const Point2& p : positions) {
      min_x = std::min(min_x, p.x);
      min_y = std::min(min_y, p.y);
      max_x = std::max(max_x, p.x);
      max_y = std::max(max_y, p.y);
    }
  }
  const double extent = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double size = 800.0;
  const double margin = 20.0;
  const double scale = (size - 2 * margin) / extent;
  // SVG y grows downward; flip so the drawing matches canvas coordinates.
  const auto sx = [&](double x) { return fixed(margin + (x - min_x) * scale); };
  const auto sy = [&](double y) { return fixed(size - margin - (y - min_y) * scale); };
  const double radius = std::clamp(size / (4.0 * std::sqrt(std::max<double>(n, 1))), 1.5, 6.0);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n";
  out += "<style>line{stroke:#b0b0b0;stroke-width:0.6}"
         "circle{stroke:#222;stroke-width:0.4}"
         ".tp{fill:#d62728}.fp{fill:#ff9f1c}.fn{fill:#1f77b4}"
         ".tn{fill:#e8e8e8}.node{fill:#7f7f7f}</style>\n";
  out += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  out += "<g id=\"edges\">\n";
  for (const Edge& e : edges) {
    out += "<line x1=\"" + sx(positions[e.u].x) + "\" y1=\"" + sy(positions[e.u].y) +
           "\" x2=\"" + sx(positions[e.v].x) + "\" y2=\"" + sy(positions[e.v].y) +
           "\"/>\n";
  }
  out += "</g>\n<g id=\"nodes\">\n";
  for (std::size_t i = 0; i < n; ++i) {
    const char* cls = "node";
    if (!predicted.empty() && !truth.empty()) {
      cls = predicted[i] ? (truth[i] ? "tp" : "fp") : (truth[i] ? "fn" : "tn");
    } else if (!predicted.empty()) {
      cls = predicted[i] ? "tp" : "tn";
    } else if (!truth.empty()) {
      cls = truth[i] ? "fn" : "tn";
    }
    out += "<circle id=\"n" + std::to_string(i) + "\" class=\"" + cls +
           "\" cx=\"" + sx(positions[i].x) + "\" cy=\"" + sy(positions[i].y) +
           "\" r=\"" + fixed(radius) + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

void emit_svg(const std::filesystem::path& path,
              std::span<const Point2> positions, std::span<const Edge> edges,
              const std::vector<bool>& predicted,
              const std::vector<bool>& truth) {
  write_text_file(path, render_svg(positions, edges, predicted, truth));
}

}  // namespace cwbound
