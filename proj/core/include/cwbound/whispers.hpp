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

#ifndef CWBOUND_WHISPERS_HPP_
#define CWBOUND_WHISPERS_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "cwbound/geometry.hpp"
#include "cwbound/graph.hpp"

namespace cwbound {

using ClusterLabel = std::uint32_t;

// Node -> cluster label, with member lists derived on construction.
class ClusterAssignment {
 public:
  ClusterAssignment() = default;
  explicit ClusterAssignment(std::vector<ClusterLabel> labels);

  // One distinct label per node: node i gets label i + 1.
  static ClusterAssignment singletons(std::size_t node_count);

  std::size_t node_count() const { return labels_.size(); }
  ClusterLabel label(NodeId u) const { return labels_.at(u); }
  std::span<const ClusterLabel> labels() const { return labels_; }

  std::size_t cluster_count() const { return members_.size(); }
  // Members in ascending id order, keyed by ascending label.
  const std::map<ClusterLabel, std::vector<NodeId>>& members() const {
    return members_;
  }
  std::size_t size_of(ClusterLabel label) const;
  // Cardinality of the cluster u belongs to.
  std::size_t cluster_size_of(NodeId u) const { return size_of(label(u)); }

  friend bool operator==(const ClusterAssignment& a,
                         const ClusterAssignment& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<ClusterLabel> labels_;
  std::map<ClusterLabel, std::vector<NodeId>> members_;
};

struct WhispersConfig {
  double delta = 0.0;       // voting threshold
  int stable_iters = 3;     // unchanged sweeps required to declare convergence
  int max_iters = 100;
  std::uint64_t seed = 1;
  // Vote with 1 / weight instead of the raw edge weight. Off by default.
  bool invert_weights = false;
};

struct WhispersResult {
  ClusterAssignment assignment;
  bool converged = false;
  int iterations = 0;
  // Distinct label count after each sweep.
  std::vector<std::size_t> cluster_count_history;
};

// New label for u given its neighbors' current labels: per-class sums of edge
// weights; the heaviest class wins (ties go to the smaller label) when its
// share of the total exceeds delta, otherwise u keeps labels[u]. Isolated
// nodes keep their label.
ClusterLabel vote_update(const Topology& topology, NodeId u,
                         std::span<const ClusterLabel> labels, double delta,
                         bool invert_weights = false);

// Label propagation: every node starts in its own class, then each sweep
// visits the nodes in a fresh seeded random order and applies vote_update in
// place. Stops after stable_iters consecutive sweeps without a change or after
// max_iters sweeps. Throws kInvalidArgument for non-positive iteration limits.
WhispersResult chinese_whispers(const Topology& topology,
                                const WhispersConfig& config);

using DistanceFn = std::function<double(NodeId, NodeId)>;

// Member minimizing the sum of distances to all members; ties go to the
// smallest id. Throws kEmptyCluster.
NodeId medoid(std::span<const NodeId> members, const DistanceFn& dist);

// Mean position of the members. Throws kEmptyCluster.
Point2 centroid(std::span<const NodeId> members,
                std::span<const Point2> positions);

}  // namespace cwbound

#endif  // CWBOUND_WHISPERS_HPP_
