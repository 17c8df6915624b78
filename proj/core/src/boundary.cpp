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

#include "cwbound/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cwbound/delaunay.hpp"
#include "cwbound/error.hpp"

namespace cwbound {

bool BoundaryPrediction::contains(NodeId id) const {
  return std::binary_search(boundary_ids.begin(), boundary_ids.end(), id);
}

namespace {

// Follows directed outer edges into closed walks and keeps the longest.
std::vector<NodeId> longest_cycle(
    const std::vector<std::pair<NodeId, NodeId>>& directed) {
  std::multimap<NodeId, std::size_t> out;
  for (std::size_t i = 0; i < directed.size(); ++i) {
    out.emplace(directed[i].first, i);
  }
  std::vector<bool> used(directed.size(), false);
  std::vector<NodeId> best;
  for (std::size_t start = 0; start < directed.size(); ++start) {
    if (used[start]) continue;
    std::vector<NodeId> cycle;
    std::size_t e = start;
    while (!used[e]) {
      used[e] = true;
      cycle.push_back(directed[e].first);
      const NodeId head = directed[e].second;
      std::size_t next = e;
      for (auto [it, end] = out.equal_range(head); it != end; ++it) {
        if (!used[it->second]) {
          next = it->second;
          break;
        }
      }
      if (next == e) break;
      e = next;
    }
    if (cycle.size() > best.size()) best = std::move(cycle);
  }
  return best;
}

}  // namespace

BoundaryPrediction extract_boundary(std::span<const Point2> positions,
                                    double alpha) {
  if (!(alpha > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must be positive");
  }
  BoundaryPrediction pred;
  pred.alpha = alpha;
  const std::size_t n = positions.size();
  if (n < 3) {
    pred.degenerate = true;
    for (std::size_t i = 0; i < n; ++i) {
      pred.boundary_ids.push_back(static_cast<NodeId>(i));
      pred.hull.push_back(static_cast<NodeId>(i));
    }
    return pred;
  }

  const Delaunay dt(positions);
  const auto& tris = dt.triangles();
  const std::size_t t_count = tris.size();
  std::vector<bool> kept(t_count, false);
  std::vector<bool> outside(t_count, false);
  std::vector<std::size_t> stack;
  for (std::size_t t = 0; t < t_count; ++t) {
    if (dt.touches_outside(tris[t])) {
      outside[t] = true;
      stack.push_back(t);
    } else {
      kept[t] = dt.circumradius(tris[t]) <= alpha;
    }
  }
  while (!stack.empty()) {
    const std::size_t t = stack.back();
    stack.pop_back();
    for (int e = 0; e < 3; ++e) {
      const int nb = dt.neighbor(t, e);
      if (nb < 0) continue;
      const auto u = static_cast<std::size_t>(nb);
      if (!kept[u] && !outside[u]) {
        outside[u] = true;
        stack.push_back(u);
      }
    }
  }

  std::vector<bool> outer(n, false);
  std::vector<bool> inner(n, false);
  std::vector<bool> in_shape(n, false);
  std::vector<std::pair<NodeId, NodeId>> outer_edges;
  for (std::size_t t = 0; t < t_count; ++t) {
    const auto& v = tris[t].v;
    for (int i = 0; i < 3; ++i) {
      const std::uint32_t id = v[static_cast<std::size_t>(i)];
      if (dt.is_outer_vertex(id)) continue;
      if (outside[t]) outer[id] = true;
      if (kept[t]) in_shape[id] = true;
      if (!kept[t] && !outside[t]) inner[id] = true;
    }
    if (!kept[t]) continue;
    for (int i = 0; i < 3; ++i) {
      const int nb = dt.neighbor(t, i);
      if (nb >= 0 && outside[static_cast<std::size_t>(nb)]) {
        outer_edges.emplace_back(v[static_cast<std::size_t>((i + 1) % 3)],
                                 v[static_cast<std::size_t>((i + 2) % 3)]);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (outer[i]) {
      pred.boundary_ids.push_back(static_cast<NodeId>(i));
    } else if (inner[i] && in_shape[i]) {
      pred.inner_boundary_ids.push_back(static_cast<NodeId>(i));
    }
  }
  pred.hull = longest_cycle(outer_edges);
  return pred;
}

double default_alpha(std::span<const Point2> positions,
                     const Topology& topology, double factor) {
  if (topology.edge_count() == 0) {
    double min_x = INFINITY, min_y = INFINITY, max_x = -INFINITY, max_y = -INFINITY;
    for (const Point2& p : positions) {
      min_x = std::min(min_x, p.x);
      min_y = std::min(min_y, p.y);
      max_x = std::max(max_x, p.x);
      max_y = std::max(max_y, p.y);
    }
    const double diag = std::hypot(max_x - min_x, max_y - min_y);
    return diag > 0.0 ? diag : 1.0;
  }
  double sum = 0.0;
  for (const Edge& e : topology.edges()) {
    sum += distance(positions[e.u], positions[e.v]);
  }
  const double mean = sum / static_cast<double>(topology.edge_count());
  return mean > 0.0 ? factor * mean : 1.0;
}

}  // namespace cwbound
