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

#include "cwbound/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <string>
#include <utility>

#include "cwbound/error.hpp"

namespace cwbound {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kNonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::kIdOutOfRange: return "IdOutOfRange";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kEmptyNetwork: return "EmptyNetwork";
    case ErrorCode::kDegenerateShape: return "DegenerateShape";
    case ErrorCode::kUnreachableDegree: return "UnreachableDegree";
    case ErrorCode::kEmptyCluster: return "EmptyCluster";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kTooFewPoints: return "TooFewPoints";
    case ErrorCode::kUndefinedMetric: return "UndefinedMetric";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string describe(const Edge& e) {
  std::ostringstream out;
  out << "edge (" << e.u << ", " << e.v << ", " << e.weight << ")";
  return out.str();
}

}  // namespace

Topology Topology::build(std::size_t node_count, std::vector<Edge> edges) {
  if (node_count == 0) {
    throw Error(ErrorCode::kInvalidArgument, "node_count must be at least 1");
  }
  for (Edge& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      throw Error(ErrorCode::kIdOutOfRange,
                  describe(e) + " with node_count " + std::to_string(node_count));
    }
    if (e.u == e.v) throw Error(ErrorCode::kSelfLoop, describe(e));
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw Error(ErrorCode::kNonPositiveWeight, describe(e));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
      throw Error(ErrorCode::kDuplicateEdge, describe(edges[i]));
    }
  }

  Topology t;
  t.node_count_ = node_count;
  t.edges_ = std::move(edges);
  t.index_adjacency();
  return t;
}

void Topology::index_adjacency() {
  offsets_.assign(node_count_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < node_count_; ++i) offsets_[i + 1] += offsets_[i];
  adjacency_.assign(2 * edges_.size(), Neighbor{});
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[cursor[e.u]++] = {e.v, e.weight};
    adjacency_[cursor[e.v]++] = {e.u, e.weight};
  }
  for (std::size_t i = 0; i < node_count_; ++i) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
  }
}

std::span<const Neighbor> Topology::neighbors(NodeId u) const {
  if (u >= node_count_) {
    throw Error(ErrorCode::kIdOutOfRange,
                "node " + std::to_string(u) + " with node_count " +
                    std::to_string(node_count_));
  }
  return std::span<const Neighbor>(adjacency_).subspan(
      offsets_[u], offsets_[u + 1] - offsets_[u]);
}

double Topology::average_degree() const {
  return 2.0 * static_cast<double>(edges_.size()) /
         static_cast<double>(node_count_);
}

Topology Topology::with_weights(std::span<const double> new_weights) const {
  if (new_weights.size() != edges_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(edges_.size()) + " weights, got " +
                    std::to_string(new_weights.size()));
  }
  Topology t;
  t.node_count_ = node_count_;
  t.edges_ = edges_;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    t.edges_[i].weight = new_weights[i];
    if (!(new_weights[i] > 0.0) || !std::isfinite(new_weights[i])) {
      throw Error(ErrorCode::kNonPositiveWeight, describe(t.edges_[i]));
    }
  }
  t.index_adjacency();
  return t;
}

std::vector<double> shortest_path_lengths(const Topology& topology,
                                          NodeId source) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(topology.node_count(), inf);
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist.at(source) = 0.0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[u]) continue;
    for (const Neighbor& nb : topology.neighbors(u)) {
      const double candidate = d + nb.weight;
      if (candidate < dist[nb.id]) {
        dist[nb.id] = candidate;
        queue.emplace(candidate, nb.id);
      }
    }
  }
  return dist;
}

Components connected_components(const Topology& topology) {
  const std::size_t n = topology.node_count();
  const std::size_t unset = static_cast<std::size_t>(-1);
  Components c;
  c.of_node.assign(n, unset);
  std::vector<NodeId> stack;
  for (NodeId start = 0; start < n; ++start) {
    if (c.of_node[start] != unset) continue;
    c.of_node[start] = c.count;
    stack.push_back(start);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (const Neighbor& nb : topology.neighbors(u)) {
        if (c.of_node[nb.id] == unset) {
          c.of_node[nb.id] = c.count;
          stack.push_back(nb.id);
        }
      }
    }
    ++c.count;
  }
  return c;
}

double estimated_distance_fspl(const RadioParams& params) {
  if (!(params.frequency_mhz > 0.0) || !std::isfinite(params.frequency_mhz)) {
    throw Error(ErrorCode::kInvalidArgument,
                "frequency must be finite and positive");
  }
  const double exponent =
      (27.55 - 20.0 * std::log10(params.frequency_mhz) -
       params.signal_strength_dbm) / 20.0;
  return std::pow(10.0, exponent);
}

double signal_strength_for_distance(double frequency_mhz, double meters) {
  return 27.55 - 20.0 * std::log10(frequency_mhz) - 20.0 * std::log10(meters);
}

}  // namespace cwbound
