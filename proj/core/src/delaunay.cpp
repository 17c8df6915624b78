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

#include "cwbound/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "cwbound/rng.hpp"

namespace cwbound {

namespace {

long double orient(const Point2& a, const Point2& b, const Point2& c) {
  return (static_cast<long double>(b.x) - a.x) * (static_cast<long double>(c.y) - a.y) -
         (static_cast<long double>(b.y) - a.y) * (static_cast<long double>(c.x) - a.x);
}

// > 0 when d lies strictly inside the circumcircle of the ccw triangle abc.
long double in_circle(const Point2& a, const Point2& b, const Point2& c,
                      const Point2& d) {
  const long double adx = static_cast<long double>(a.x) - d.x;
  const long double ady = static_cast<long double>(a.y) - d.y;
  const long double bdx = static_cast<long double>(b.x) - d.x;
  const long double bdy = static_cast<long double>(b.y) - d.y;
  const long double cdx = static_cast<long double>(c.x) - d.x;
  const long double cdy = static_cast<long double>(c.y) - d.y;
  const long double ad = adx * adx + ady * ady;
  const long double bd = bdx * bdx + bdy * bdy;
  const long double cd = cdx * cdx + cdy * cdy;
  return adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) +
         ad * (bdx * cdy - bdy * cdx);
}

// Relative size of the deterministic perturbation that removes exact
// collinearity and duplicates (canvas clamping produces both).
constexpr double kPerturbation = 1e-7;
constexpr double kEnclosingScale = 1e3;

}  // namespace

Delaunay::Delaunay(std::span<const Point2> points) : n_(points.size()) {
  double min_x = INFINITY, min_y = INFINITY, max_x = -INFINITY, max_y = -INFINITY;
  for (const Point2& p : points) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  if (n_ == 0) return;
  const double extent = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const Point2 mid{(min_x + max_x) / 2, (min_y + max_y) / 2};

  vertices_.reserve(n_ + 3);
  for (std::size_t i = 0; i < n_; ++i) {
    const std::uint64_t h = mix_seed(0x5DEECE66DULL, i, n_);
    const double jx = static_cast<double>(h & 0xFFFFFF) / 0xFFFFFF - 0.5;
    const double jy = static_cast<double>((h >> 24) & 0xFFFFFF) / 0xFFFFFF - 0.5;
    vertices_.push_back({points[i].x + jx * kPerturbation * extent,
                         points[i].y + jy * kPerturbation * extent});
  }
  const double big = kEnclosingScale * extent;
  vertices_.push_back({mid.x - 2 * big, mid.y - big});
  vertices_.push_back({mid.x + 2 * big, mid.y - big});
  vertices_.push_back({mid.x, mid.y + 2 * big});

  const auto s = static_cast<std::uint32_t>(n_);
  triangles_.push_back({{s, s + 1, s + 2}});

  std::vector<bool> bad;
  std::vector<Triangle> kept;
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> edge_count;
  for (std::uint32_t p = 0; p < n_; ++p) {
    const Point2& q = vertices_[p];
    bad.assign(triangles_.size(), false);
    edge_count.clear();
    for (std::size_t t = 0; t < triangles_.size(); ++t) {
      const auto& v = triangles_[t].v;
      if (in_circle(vertices_[v[0]], vertices_[v[1]], vertices_[v[2]], q) > 0) {
        bad[t] = true;
        for (int e = 0; e < 3; ++e) {
          std::uint32_t a = v[static_cast<std::size_t>(e)];
          std::uint32_t b = v[static_cast<std::size_t>((e + 1) % 3)];
          if (a > b) std::swap(a, b);
          ++edge_count[{a, b}];
        }
      }
    }
    kept.clear();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> rim;
    for (std::size_t t = 0; t < triangles_.size(); ++t) {
      if (!bad[t]) {
        kept.push_back(triangles_[t]);
        continue;
      }
      const auto& v = triangles_[t].v;
      for (int e = 0; e < 3; ++e) {
        const std::uint32_t a = v[static_cast<std::size_t>(e)];
        const std::uint32_t b = v[static_cast<std::size_t>((e + 1) % 3)];
        if (edge_count[{std::min(a, b), std::max(a, b)}] == 1) rim.emplace_back(a, b);
      }
    }
    for (const auto& [a, b] : rim) {
      // Rim edges keep the cavity's ccw orientation, so (a, b, p) is ccw.
      if (orient(vertices_[a], vertices_[b], q) > 0) kept.push_back({{a, b, p}});
    }
    triangles_.swap(kept);
  }

  // Adjacency: neighbor across edge i is opposite v[i].
  adjacency_.assign(triangles_.size(), {-1, -1, -1});
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::pair<int, int>> owner;
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const auto& v = triangles_[t].v;
    for (int i = 0; i < 3; ++i) {
      std::uint32_t a = v[static_cast<std::size_t>((i + 1) % 3)];
      std::uint32_t b = v[static_cast<std::size_t>((i + 2) % 3)];
      if (a > b) std::swap(a, b);
      const auto it = owner.find({a, b});
      if (it == owner.end()) {
        owner.emplace(std::make_pair(a, b), std::make_pair(static_cast<int>(t), i));
      } else {
        const auto [other, j] = it->second;
        adjacency_[t][static_cast<std::size_t>(i)] = other;
        adjacency_[static_cast<std::size_t>(other)][static_cast<std::size_t>(j)] =
            static_cast<int>(t);
      }
    }
  }
}

double Delaunay::circumradius(const Triangle& t) const {
  const Point2& a = vertices_[t.v[0]];
  const Point2& b = vertices_[t.v[1]];
  const Point2& c = vertices_[t.v[2]];
  const double ab = distance(a, b);
  const double bc = distance(b, c);
  const double ca = distance(c, a);
  const double area2 = std::abs(static_cast<double>(orient(a, b, c)));
  if (area2 == 0.0) return INFINITY;
  return ab * bc * ca / (2.0 * area2);
}

}  // namespace cwbound
