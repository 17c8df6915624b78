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

#include "cwbound/netgen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cwbound/error.hpp"
#include "cwbound/rng.hpp"
#include "cwbound/topology_io.hpp"

namespace cwbound {

std::string_view shape_name(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::kUShape: return "u_shape";
    case ShapeKind::kDoughnut: return "doughnut";
    case ShapeKind::kSmile: return "smile";
    case ShapeKind::kStar: return "star";
  }
  return "unknown";
}

ShapeKind parse_shape(std::string_view name) {
  for (ShapeKind k : {ShapeKind::kUShape, ShapeKind::kDoughnut,
                      ShapeKind::kSmile, ShapeKind::kStar}) {
    if (shape_name(k) == name) return k;
  }
  throw Error(ErrorCode::kConfigError,
              "unknown shape '" + std::string(name) +
                  "' (expected u_shape, doughnut, smile or star)");
}

namespace {

constexpr double kPi = std::numbers::pi;

Polyline circle(Point2 center, double radius, int segments) {
  Polyline out;
  out.reserve(static_cast<std::size_t>(segments));
  for (int i = 0; i < segments; ++i) {
    const double t = 2.0 * kPi * i / segments;
    out.push_back({center.x + radius * std::cos(t),
                   center.y + radius * std::sin(t)});
  }
  return out;
}

// Subdivides a polygon's edges so that the closed polyline has exactly
// `segments` segments, distributed by edge length (largest remainder).
Polyline subdivide(const Polyline& corners, int segments) {
  const std::size_t m = corners.size();
  std::vector<double> lengths(m);
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    lengths[i] = distance(corners[i], corners[(i + 1) % m]);
    total += lengths[i];
  }
  std::vector<int> counts(m, 1);
  int assigned = static_cast<int>(m);
  std::vector<std::pair<double, std::size_t>> remainders;
  for (std::size_t i = 0; i < m; ++i) {
    const double share = lengths[i] / total * (segments - static_cast<int>(m));
    const int whole = static_cast<int>(std::floor(share));
    counts[i] += whole;
    assigned += whole;
    remainders.push_back({share - whole, i});
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t k = 0; assigned < segments; ++k, ++assigned) {
    ++counts[remainders[k % m].second];
  }
  Polyline out;
  out.reserve(static_cast<std::size_t>(segments));
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 a = corners[i];
    const Point2 b = corners[(i + 1) % m];
    for (int j = 0; j < counts[i]; ++j) {
      out.push_back(a + (b - a) * (static_cast<double>(j) / counts[i]));
    }
  }
  return out;
}

double polyline_length(const Polyline& poly) {
  double total = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    total += distance(poly[i], poly[(i + 1) % poly.size()]);
  }
  return total;
}

void validate(const ShapeSpec& spec) {
  if (!(spec.scale > 0.0) || !std::isfinite(spec.scale)) {
    throw Error(ErrorCode::kDegenerateShape, "scale must be positive");
  }
  if (spec.kind == ShapeKind::kDoughnut &&
      !(spec.doughnut_inner_ratio > 0.0 && spec.doughnut_inner_ratio < 1.0)) {
    throw Error(ErrorCode::kDegenerateShape,
                "doughnut inner radius must be below the outer radius");
  }
  if (spec.kind == ShapeKind::kStar &&
      (spec.star_points < 3 ||
       !(spec.star_inner_ratio > 0.0 && spec.star_inner_ratio < 1.0))) {
    throw Error(ErrorCode::kDegenerateShape,
                "star needs at least 3 points and 0 < inner ratio < 1");
  }
}

}  // namespace

ShapeGeometry shape_geometry(const ShapeSpec& spec) {
  validate(spec);
  const double s = spec.scale;
  const Point2 c{s / 2, s / 2};
  const double r = s / 2;
  ShapeGeometry g;
  switch (spec.kind) {
    case ShapeKind::kUShape:
      g.outer = subdivide({{0, 0},
                           {s, 0},
                           {s, s},
                           {0.65 * s, s},
                           {0.65 * s, 0.35 * s},
                           {0.35 * s, 0.35 * s},
                           {0.35 * s, s},
                           {0, s}},
                          kBorderResolution);
      break;
    case ShapeKind::kDoughnut:
      g.outer = circle(c, r, kBorderResolution);
      g.holes.push_back(
          circle(c, r * spec.doughnut_inner_ratio, kBorderResolution));
      break;
    case ShapeKind::kSmile: {
      g.outer = circle(c, r, kBorderResolution);
      g.holes.push_back(circle({c.x - 0.18 * s, c.y + 0.14 * s}, 0.07 * s,
                               kBorderResolution));
      g.holes.push_back(circle({c.x + 0.18 * s, c.y + 0.14 * s}, 0.07 * s,
                               kBorderResolution));
      // Mouth: annular sector below the center.
      const double r_in = 0.20 * s;
      const double r_out = 0.30 * s;
      const double from = 210.0 * kPi / 180.0;
      const double to = 330.0 * kPi / 180.0;
      const int arc = (kBorderResolution - 2) / 2;
      Polyline mouth;
      for (int i = 0; i <= arc; ++i) {
        const double t = from + (to - from) * i / arc;
        mouth.push_back({c.x + r_out * std::cos(t), c.y + r_out * std::sin(t)});
      }
      for (int i = arc; i >= 0; --i) {
        const double t = from + (to - from) * i / arc;
        mouth.push_back({c.x + r_in * std::cos(t), c.y + r_in * std::sin(t)});
      }
      g.holes.push_back(std::move(mouth));
      break;
    }
    case ShapeKind::kStar: {
      Polyline corners;
      const int k = spec.star_points;
      for (int i = 0; i < 2 * k; ++i) {
        const double t = kPi / 2 + kPi * i / k;
        const double rr = (i % 2 == 0) ? r : r * spec.star_inner_ratio;
        corners.push_back({c.x + rr * std::cos(t), c.y + rr * std::sin(t)});
      }
      g.outer = subdivide(corners, kBorderResolution);
      break;
    }
  }
  return g;
}

namespace {

bool inside_polyline(const Polyline& poly, Point2 p) {
  bool inside = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const Point2 a = poly[i];
    const Point2 b = poly[j];
    if ((a.y > p.y) != (b.y > p.y) &&
        p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) {
      inside = !inside;
    }
  }
  return inside;
}

}  // namespace

bool inside_region(const ShapeGeometry& geometry, Point2 p) {
  if (!inside_polyline(geometry.outer, p)) return false;
  for (const Polyline& hole : geometry.holes) {
    if (inside_polyline(hole, p)) return false;
  }
  return true;
}

double distance_to_polyline(const Polyline& polyline, Point2 p) {
  double best = INFINITY;
  for (std::size_t i = 0; i < polyline.size(); ++i) {
    best = std::min(best, point_segment_distance(
                              p, polyline[i],
                              polyline[(i + 1) % polyline.size()]));
  }
  return best;
}

double distance_to_border(const ShapeGeometry& geometry, Point2 p) {
  double best = distance_to_polyline(geometry.outer, p);
  for (const Polyline& hole : geometry.holes) {
    best = std::min(best, distance_to_polyline(hole, p));
  }
  return best;
}

double border_tolerance(const ShapeSpec& spec) { return spec.scale / 200.0; }

std::vector<NodeId> LabeledPointSet::boundary_ids() const {
  std::vector<NodeId> ids;
  for (std::size_t i = 0; i < is_boundary.size(); ++i) {
    if (is_boundary[i]) ids.push_back(static_cast<NodeId>(i));
  }
  return ids;
}

LabeledPointSet generate_points(const ShapeSpec& shape, std::size_t n,
                                double boundary_fraction, std::uint64_t seed) {
  if (n < 3) {
    throw Error(ErrorCode::kEmptyNetwork,
                "need at least 3 nodes, got " + std::to_string(n));
  }
  if (!(boundary_fraction > 0.0 && boundary_fraction < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "boundary_fraction must lie in (0, 1)");
  }
  const ShapeGeometry geometry = shape_geometry(shape);
  const double eps = border_tolerance(shape);

  std::vector<const Polyline*> borders{&geometry.outer};
  for (const Polyline& hole : geometry.holes) borders.push_back(&hole);
  std::vector<double> cumulative;
  double total = 0.0;
  for (const Polyline* b : borders) {
    total += polyline_length(*b);
    cumulative.push_back(total);
  }

  Rng rng(seed);
  const auto on_border = static_cast<std::size_t>(
      std::llround(static_cast<double>(n) * boundary_fraction));

  struct Sample {
    Point2 p;
    bool outer;
    bool inner;
  };
  std::vector<Sample> samples;
  samples.reserve(n);
  for (std::size_t i = 0; i < on_border; ++i) {
    double t = rng.uniform(0.0, total);
    std::size_t which = 0;
    while (which + 1 < borders.size() && t >= cumulative[which]) ++which;
    if (which > 0) t -= cumulative[which - 1];
    const Polyline& poly = *borders[which];
    Point2 p = poly.back();
    for (std::size_t s = 0; s < poly.size(); ++s) {
      const Point2 a = poly[s];
      const Point2 b = poly[(s + 1) % poly.size()];
      const double len = distance(a, b);
      if (t <= len || s + 1 == poly.size()) {
        p = a + (b - a) * (len > 0 ? std::min(t / len, 1.0) : 0.0);
        break;
      }
      t -= len;
    }
    samples.push_back({p, which == 0, which != 0});
  }
  while (samples.size() < n) {
    const Point2 p{rng.uniform(0.0, shape.scale), rng.uniform(0.0, shape.scale)};
    if (inside_region(geometry, p) && distance_to_border(geometry, p) > eps) {
      samples.push_back({p, false, false});
    }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(std::span<std::size_t>(order));

  LabeledPointSet out;
  out.shape = shape;
  out.seed = seed;
  out.positions.resize(n);
  out.is_boundary.resize(n);
  out.is_inner_boundary.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Sample& s = samples[order[i]];
    out.positions[i] = s.p;
    out.is_boundary[i] = s.outer;
    out.is_inner_boundary[i] = s.inner;
  }
  return out;
}

RadiusConnection connect_by_radius(const LabeledPointSet& points,
                                   double target_avg_degree, double tol) {
  const std::size_t n = points.size();
  if (!(target_avg_degree >= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "target degree must be >= 1");
  }
  if (n < 2 || target_avg_degree > static_cast<double>(n - 1)) {
    throw Error(ErrorCode::kUnreachableDegree,
                "target degree " + format_number(target_avg_degree) +
                    " exceeds n - 1 for n = " + std::to_string(n));
  }

  std::vector<double> pair_dist;
  pair_dist.reserve(n * (n - 1) / 2);
  double min_x = INFINITY, min_y = INFINITY, max_x = -INFINITY, max_y = -INFINITY;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 p = points.positions[i];
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
    for (std::size_t j = i + 1; j < n; ++j) {
      pair_dist.push_back(distance(p, points.positions[j]));
    }
  }
  std::vector<double> sorted = pair_dist;
  std::sort(sorted.begin(), sorted.end());
  const auto degree_at = [&](double r) {
    const auto count = std::upper_bound(sorted.begin(), sorted.end(), r) -
                       sorted.begin();
    return 2.0 * static_cast<double>(count) / static_cast<double>(n);
  };

  double lo = 0.0;
  double hi = std::hypot(max_x - min_x, max_y - min_y);
  for (int iter = 0; iter < 40; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (degree_at(mid) < target_avg_degree) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double radius;
  if (std::abs(degree_at(hi) - target_avg_degree) <= tol) {
    radius = hi;
  } else if (std::abs(degree_at(lo) - target_avg_degree) <= tol) {
    radius = lo;
  } else {
    throw Error(ErrorCode::kUnreachableDegree,
                "no radius within tolerance " + format_number(tol) +
                    " of degree " + format_number(target_avg_degree));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      if (pair_dist[k] <= radius) {
        edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j),
                         pair_dist[k]});
      }
    }
  }
  RadiusConnection out{Topology::build(n, std::move(edges)), radius, 0.0};
  out.achieved_degree = out.topology.average_degree();
  return out;
}

Topology perturb_weights(const Topology& topology,
                         const LabeledPointSet& true_positions, double noise,
                         std::uint64_t seed) {
  if (!(noise >= 0.0 && noise < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "noise must lie in [0, 1)");
  }
  if (true_positions.size() != topology.node_count()) {
    throw Error(ErrorCode::kInvalidArgument,
                "point set size does not match the topology");
  }
  Rng rng(seed);
  std::vector<double> weights;
  weights.reserve(topology.edge_count());
  for (const Edge& e : topology.edges()) {
    const double exact =
        distance(true_positions.positions[e.u], true_positions.positions[e.v]);
    const double factor = noise == 0.0 ? 1.0 : rng.uniform(1.0 - noise, 1.0 + noise);
    weights.push_back(exact * factor);
  }
  return topology.with_weights(weights);
}

std::string points_to_csv(const LabeledPointSet& points) {
  std::string out = "id,x,y,is_boundary,is_inner_boundary\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    out += std::to_string(i) + ',' + format_number(points.positions[i].x) +
           ',' + format_number(points.positions[i].y) + ',' +
           (points.is_boundary[i] ? "1" : "0") + ',' +
           (points.is_inner_boundary[i] ? "1" : "0") + '\n';
  }
  return out;
}

}  // namespace cwbound
