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

#ifndef CWBOUND_GRAPH_HPP_
#define CWBOUND_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cwbound {

using NodeId = std::uint32_t;

// An undirected edge. In a Topology it is stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 1.0;  // estimated distance in meters

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  NodeId id = 0;
  double weight = 0.0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// Immutable undirected weighted graph over nodes 0..node_count-1.
//
// Edges are kept in canonical (u < v) order, sorted by (u, v); every node's
// neighbor list is sorted by id. Both orders are relied on downstream for
// deterministic iteration. Disconnected graphs are valid.
class Topology {
 public:
  // Validates and canonicalizes. Throws Error with kSelfLoop, kDuplicateEdge,
  // kNonPositiveWeight or kIdOutOfRange naming the offending edge, and
  // kInvalidArgument for node_count == 0.
  static Topology build(std::size_t node_count, std::vector<Edge> edges);

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  // 1-hop neighbors of u sorted by id. Throws kIdOutOfRange.
  std::span<const Neighbor> neighbors(NodeId u) const;
  std::size_t degree(NodeId u) const { return neighbors(u).size(); }

  // 2|E| / n.
  double average_degree() const;

  // Same edge set with weights replaced; new_weights is indexed like edges().
  // Throws kNonPositiveWeight or kInvalidArgument on a size mismatch.
  Topology with_weights(std::span<const double> new_weights) const;

  friend bool operator==(const Topology& a, const Topology& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
  }

 private:
  Topology() = default;
  void index_adjacency();

  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;  // CSR row offsets, size n + 1
  std::vector<Neighbor> adjacency_;
};

// Weighted single-source shortest path lengths (Dijkstra). Unreachable nodes
// get +infinity.
std::vector<double> shortest_path_lengths(const Topology& topology,
                                          NodeId source);

// Number of connected components and the component index of every node.
struct Components {
  std::size_t count = 0;
  std::vector<std::size_t> of_node;
};
Components connected_components(const Topology& topology);

// Free-space path loss parameters for converting a received signal strength
// into a distance estimate.
struct RadioParams {
  double frequency_mhz = 2400.0;
  double signal_strength_dbm = -60.0;
};

// d = 10^((27.55 - 20 log10(f) - s) / 20), in meters. Throws kInvalidArgument
// when the frequency is not finite and positive.
double estimated_distance_fspl(const RadioParams& params);

// Inverse of estimated_distance_fspl for a fixed frequency.
double signal_strength_for_distance(double frequency_mhz, double meters);

}  // namespace cwbound

#endif  // CWBOUND_GRAPH_HPP_
