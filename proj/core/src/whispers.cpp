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

#include "cwbound/whispers.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "cwbound/error.hpp"
#include "cwbound/rng.hpp"

namespace cwbound {

ClusterAssignment::ClusterAssignment(std::vector<ClusterLabel> labels)
    : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    members_[labels_[i]].push_back(static_cast<NodeId>(i));
  }
}

ClusterAssignment ClusterAssignment::singletons(std::size_t node_count) {
  std::vector<ClusterLabel> labels(node_count);
  std::iota(labels.begin(), labels.end(), ClusterLabel{1});
  return ClusterAssignment(std::move(labels));
}

std::size_t ClusterAssignment::size_of(ClusterLabel label) const {
  const auto it = members_.find(label);
  return it == members_.end() ? 0 : it->second.size();
}

ClusterLabel vote_update(const Topology& topology, NodeId u,
                         std::span<const ClusterLabel> labels, double delta,
                         bool invert_weights) {
  const auto neighbors = topology.neighbors(u);
  if (neighbors.empty()) return labels[u];

  // Degrees are small; a flat list beats a map here.
  std::vector<std::pair<ClusterLabel, double>> class_weight;
  double total = 0.0;
  for (const Neighbor& nb : neighbors) {
    const ClusterLabel c = labels[nb.id];
    const double w = invert_weights ? 1.0 / nb.weight : nb.weight;
    auto it = std::find_if(class_weight.begin(), class_weight.end(),
                           [c](const auto& e) { return e.first == c; });
    if (it == class_weight.end()) {
      class_weight.emplace_back(c, w);
    } else {
      it->second += w;
    }
    total += w;
  }
  ClusterLabel best = class_weight.front().first;
  double best_weight = class_weight.front().second;
  for (const auto& [c, w] : class_weight) {
    if (w > best_weight || (w == best_weight && c < best)) {
      best = c;
      best_weight = w;
    }
  }
  if (total > 0.0 && best_weight / total > delta) return best;
  return labels[u];
}

WhispersResult chinese_whispers(const Topology& topology,
                                const WhispersConfig& config) {
  if (config.max_iters < 1 || config.stable_iters < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "max_iters and stable_iters must be at least 1");
  }
  const std::size_t n = topology.node_count();
  std::vector<ClusterLabel> labels(n);
  std::iota(labels.begin(), labels.end(), ClusterLabel{1});
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});

  Rng rng(config.seed);
  WhispersResult result;
  int unchanged = 0;
  while (result.iterations < config.max_iters) {
    rng.shuffle(std::span<NodeId>(order));
    bool changed = false;
    for (const NodeId u : order) {
      const ClusterLabel next =
          vote_update(topology, u, labels, config.delta, config.invert_weights);
      if (next != labels[u]) {
        labels[u] = next;
        changed = true;
      }
    }
    ++result.iterations;
    std::vector<ClusterLabel> distinct(labels);
    std::sort(distinct.begin(), distinct.end());
    result.cluster_count_history.push_back(static_cast<std::size_t>(
        std::unique(distinct.begin(), distinct.end()) - distinct.begin()));
    unchanged = changed ? 0 : unchanged + 1;
    if (unchanged >= config.stable_iters) {
      result.converged = true;
      break;
    }
  }
  result.assignment = ClusterAssignment(std::move(labels));
  return result;
}

NodeId medoid(std::span<const NodeId> members, const DistanceFn& dist) {
  if (members.empty()) throw Error(ErrorCode::kEmptyCluster, "medoid of nothing");
  // Accumulate each unordered pair once.
  std::vector<double> sums(members.size(), 0.0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const double d = dist(members[i], members[j]);
      sums[i] += d;
      sums[j] += d;
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < members.size(); ++i) {
    if (sums[i] < sums[best] ||
        (sums[i] == sums[best] && members[i] < members[best])) {
      best = i;
    }
  }
  return members[best];
}

Point2 centroid(std::span<const NodeId> members,
                std::span<const Point2> positions) {
  if (members.empty()) {
    throw Error(ErrorCode::kEmptyCluster, "centroid of nothing");
  }
  Point2 sum;
  for (const NodeId id : members) sum += positions[id];
  return sum * (1.0 / static_cast<double>(members.size()));
}

}  // namespace cwbound
