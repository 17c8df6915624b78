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

#include "cwbound/layout.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <unordered_map>

#include "cwbound/error.hpp"
#include "cwbound/rng.hpp"
#include "cwbound/topology_io.hpp"

namespace cwbound {

std::string_view phase_name(LayoutPhase phase) {
  return phase == LayoutPhase::kCenterGravity ? "center" : "centroid";
}

void LayoutConfig::validate() const {
  const auto fail = [](const char* what) {
    throw Error(ErrorCode::kConfigError, what);
  };
  if (!(canvas_size > 0.0)) fail("canvas_size must be positive");
  if (!(expansion_multiplier > 0.0)) fail("expansion_multiplier must be positive");
  if (!(gravity_coefficient >= 0.0)) fail("gravity_coefficient must be >= 0");
  if (!(time_budget_s >= 0.0)) fail("time_budget_s must be >= 0");
  if (!(proportionality_threshold > 0.0 && proportionality_threshold <= 1.0)) {
    fail("proportionality_threshold must lie in (0, 1]");
  }
  if (recluster_period < 1) fail("recluster_period must be >= 1");
  if (!(effective_displacement_cap() > 0.0)) fail("displacement_cap must be positive");
  if (!(cooling_factor > 0.0 && cooling_factor <= 1.0)) {
    fail("cooling_factor must lie in (0, 1]");
  }
  if (!(min_distance > 0.0)) fail("min_distance must be positive");
  if (max_iterations < 0) fail("max_iterations must be >= 0");
  if (!(convergence_factor >= 0.0)) fail("convergence_factor must be >= 0");
  if (fr_cooling_iterations < 1) fail("fr_cooling_iterations must be >= 1");
}

double ideal_k(double expansion_multiplier, double canvas_size, std::size_t n) {
  return expansion_multiplier * canvas_size / (static_cast<double>(n) + 1.0);
}

double attraction_mag(double d, double w) { return std::log1p(d * w); }

double repulsion_mag(std::size_t size1, std::size_t size2, double d,
                     double d_min) {
  return static_cast<double>(size1) * static_cast<double>(size2) /
         std::max(d, d_min);
}

double gravity_mag(double k, double gravity_coefficient, double dist) {
  return k * gravity_coefficient * dist;
}

double proportionality(std::span<const double> canvas_dists,
                       std::span<const double> est_dists) {
  if (canvas_dists.size() != est_dists.size() || canvas_dists.size() < 2) {
    throw Error(ErrorCode::kDegenerateInput,
                "need two equal-length samples of size >= 2");
  }
  const double n = static_cast<double>(canvas_dists.size());
  double mean_a = 0.0, mean_b = 0.0;
  for (std::size_t i = 0; i < canvas_dists.size(); ++i) {
    mean_a += canvas_dists[i];
    mean_b += est_dists[i];
  }
  mean_a /= n;
  mean_b /= n;
  double cov = 0.0, var_a = 0.0, var_b = 0.0;
  for (std::size_t i = 0; i < canvas_dists.size(); ++i) {
    const double da = canvas_dists[i] - mean_a;
    const double db = est_dists[i] - mean_b;
    cov += da * db;
    var_a += da * da;
    var_b += db * db;
  }
  if (var_a == 0.0 || var_b == 0.0) {
    throw Error(ErrorCode::kDegenerateInput, "zero variance sample");
  }
  return std::clamp(cov / std::sqrt(var_a * var_b), -1.0, 1.0);
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Point2 clamp_to_canvas(Point2 p, double a) {
  return {std::clamp(p.x, 0.0, a), std::clamp(p.y, 0.0, a)};
}

// Unit vector for separating two coincident nodes; depends only on the pair.
Point2 jitter_direction(std::uint64_t seed, NodeId u, NodeId v) {
  const double angle = static_cast<double>(mix_seed(seed, u, v) >> 11) *
                       0x1.0p-53 * 2.0 * std::numbers::pi;
  return {std::cos(angle), std::sin(angle)};
}

// Caps every displacement at the temperature, moves and clamps.
StepStats apply_displacements(std::vector<Point2>& positions,
                              std::span<Point2> disp, double temperature,
                              double canvas) {
  StepStats stats;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    Point2 d = disp[i];
    const double len = norm(d);
    if (len > temperature) d = d * (temperature / len);
    const Point2 next = clamp_to_canvas(positions[i] + d, canvas);
    const double moved = distance(next, positions[i]);
    positions[i] = next;
    stats.total_displacement += moved;
    stats.max_displacement = std::max(stats.max_displacement, moved);
  }
  return stats;
}

double mean_edge_weight(const Topology& topology) {
  if (topology.edge_count() == 0) return 1.0;
  double sum = 0.0;
  for (const Edge& e : topology.edges()) sum += e.weight;
  return sum / static_cast<double>(topology.edge_count());
}

}  // namespace

StepStats step_in_place(LayoutState& state, const Topology& topology,
                        const LayoutConfig& config) {
  const std::size_t n = topology.node_count();
  if (state.positions.size() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "layout state does not match the topology");
  }
  const double a = config.canvas_size;
  const double k = ideal_k(config.expansion_multiplier, a, n);
  const double d_min = config.min_distance;
  const bool clustered = state.assignment.node_count() == n;
  std::vector<Point2> disp(n);
  const auto& pos = state.positions;

  if (config.forces.repulsion) {
    std::vector<std::size_t> size(n, 1);
    if (clustered) {
      for (NodeId u = 0; u < n; ++u) size[u] = state.assignment.cluster_size_of(u);
    }
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        const Point2 delta = pos[u] - pos[v];
        const double d = norm(delta);
        const Point2 dir = d < d_min ? jitter_direction(config.seed, u, v)
                                     : delta * (1.0 / d);
        const Point2 push = dir * repulsion_mag(size[u], size[v], d, d_min);
        disp[u] += push;
        disp[v] -= push;
      }
    }
  }

  if (config.forces.attraction) {
    const double mean_w = mean_edge_weight(topology);
    for (const Edge& e : topology.edges()) {
      const Point2 delta = pos[e.u] - pos[e.v];
      const double d = norm(delta);
      if (d == 0.0) continue;
      const bool same = clustered &&
                        state.assignment.label(e.u) == state.assignment.label(e.v);
      const double w = same ? e.weight / mean_w : 1.0;
      const Point2 pull = delta * (attraction_mag(d, w) / d);
      disp[e.u] -= pull;
      disp[e.v] += pull;
    }
  }

  if (config.forces.gravity) {
    const Point2 center{a / 2, a / 2};
    for (NodeId u = 0; u < n; ++u) {
      Point2 attractor = center;
      if (state.phase == LayoutPhase::kCentroidGravity && clustered) {
        const auto it = state.centroids.find(state.assignment.label(u));
        if (it != state.centroids.end()) attractor = it->second;
      }
      const Point2 delta = attractor - pos[u];
      const double dist = norm(delta);
      if (dist > 0.0) {
        disp[u] += delta * (gravity_mag(k, config.gravity_coefficient, dist) / dist);
      }
    }
  }

  const StepStats stats =
      apply_displacements(state.positions, disp, state.temperature, a);
  state.temperature *= config.cooling_factor;
  ++state.iteration;
  return stats;
}

LayoutState step(LayoutState state, const Topology& topology,
                 const LayoutConfig& config) {
  step_in_place(state, topology, config);
  return state;
}

std::vector<Point2> initial_positions(const Topology& topology,
                                      const LayoutConfig& config) {
  const std::size_t n = topology.node_count();
  const double a = config.canvas_size;
  if (!config.start_positions.empty()) {
    if (config.start_positions.size() != n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "start_positions does not match the node count");
    }
    std::vector<Point2> positions;
    for (const Point2& p : config.start_positions) {
      positions.push_back(clamp_to_canvas(p, a));
    }
    return positions;
  }
  Rng rng(config.seed);
  std::vector<Point2> positions(n);
  for (Point2& p : positions) p = {rng.uniform(0.0, a), rng.uniform(0.0, a)};
  if (!config.init_from_estimated_distance || topology.edge_count() == 0) {
    return positions;
  }

  // Breadth-first: each newly reached node sits at its estimated distance
  // from the node that reached it, in a random direction. Component roots keep
  // their uniform position.
  const double scale =
      ideal_k(config.expansion_multiplier, a, n) / mean_edge_weight(topology);
  std::vector<bool> placed(n, false);
  std::deque<NodeId> queue;
  for (NodeId root = 0; root < n; ++root) {
    if (placed[root]) continue;
    placed[root] = true;
    queue.push_back(root);
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      for (const Neighbor& nb : topology.neighbors(u)) {
        if (placed[nb.id]) continue;
        placed[nb.id] = true;
        const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const Point2 offset{std::cos(angle), std::sin(angle)};
        positions[nb.id] =
            clamp_to_canvas(positions[u] + offset * (nb.weight * scale), a);
        queue.push_back(nb.id);
      }
    }
  }
  return positions;
}

namespace {

// Estimated (weighted shortest-path) distances from a set of sources, cached
// per source.
class EstimatedDistances {
 public:
  explicit EstimatedDistances(const Topology& topology) : topology_(topology) {}

  const std::vector<double>& from(NodeId source) {
    auto it = rows_.find(source);
    if (it == rows_.end()) {
      it = rows_.emplace(source, shortest_path_lengths(topology_, source)).first;
    }
    return it->second;
  }
  void clear() { rows_.clear(); }

 private:
  const Topology& topology_;
  std::unordered_map<NodeId, std::vector<double>> rows_;
};

std::map<ClusterLabel, NodeId> graph_medoids(const ClusterAssignment& assignment,
                                             EstimatedDistances& est) {
  std::map<ClusterLabel, NodeId> out;
  for (const auto& [label, members] : assignment.members()) {
    out[label] = medoid(members, [&est](NodeId x, NodeId y) {
      return est.from(x)[y];
    });
    est.clear();
  }
  return out;
}

std::map<ClusterLabel, NodeId> canvas_medoids(
    const ClusterAssignment& assignment, std::span<const Point2> positions) {
  std::map<ClusterLabel, NodeId> out;
  for (const auto& [label, members] : assignment.members()) {
    out[label] = medoid(members, [positions](NodeId x, NodeId y) {
      return distance(positions[x], positions[y]);
    });
  }
  return out;
}

std::map<ClusterLabel, Point2> all_centroids(const ClusterAssignment& assignment,
                                             std::span<const Point2> positions) {
  std::map<ClusterLabel, Point2> out;
  for (const auto& [label, members] : assignment.members()) {
    out[label] = centroid(members, positions);
  }
  return out;
}

// Medoid pairs with a finite estimated distance, and that distance.
struct MedoidPairs {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::vector<double> est;
};

MedoidPairs medoid_pairs(const std::map<ClusterLabel, NodeId>& medoids,
                         const Topology& topology) {
  std::vector<NodeId> ids;
  for (const auto& [label, id] : medoids) ids.push_back(id);
  MedoidPairs out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto row = shortest_path_lengths(topology, ids[i]);
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (std::isfinite(row[ids[j]])) {
        out.pairs.emplace_back(ids[i], ids[j]);
        out.est.push_back(row[ids[j]]);
      }
    }
  }
  return out;
}

double medoid_proportionality(const MedoidPairs& mp,
                              std::span<const Point2> positions) {
  std::vector<double> canvas;
  canvas.reserve(mp.pairs.size());
  for (const auto& [x, y] : mp.pairs) {
    canvas.push_back(distance(positions[x], positions[y]));
  }
  try {
    return proportionality(canvas, mp.est);
  } catch (const Error&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

// The proportionality gate needs at least this many medoid pairs to be
// meaningful; below it the gate is skipped.
constexpr std::size_t kMinGatePairs = 3;

}  // namespace

LayoutResult run_cwbound(const Topology& topology, const LayoutConfig& config,
                         const WhispersConfig& whispers,
                         const LayoutObserver& observer) {
  config.validate();
  const auto start = Clock::now();
  const std::size_t n = topology.node_count();
  const double k = ideal_k(config.expansion_multiplier, config.canvas_size, n);
  const double nan = std::numeric_limits<double>::quiet_NaN();

  LayoutState state;
  state.assignment = chinese_whispers(topology, whispers).assignment;
  EstimatedDistances est(topology);
  state.medoids = graph_medoids(state.assignment, est);
  MedoidPairs gate = medoid_pairs(state.medoids, topology);
  state.positions = initial_positions(topology, config);
  state.temperature = config.effective_displacement_cap();
  state.phase = LayoutPhase::kCenterGravity;

  LayoutResult result;
  result.phase_history.emplace_back(0, LayoutPhase::kCenterGravity);
  result.final_proportionality = nan;

  // Weights that drive clustering and the attraction boost: estimated
  // distances first, canvas edge lengths after the phase switch.
  Topology weighted = topology;
  int recluster_count = 0;
  int last_recluster = 0;

  const auto recluster = [&]() {
    std::vector<double> lengths;
    lengths.reserve(topology.edge_count());
    for (const Edge& e : topology.edges()) {
      lengths.push_back(std::max(
          distance(state.positions[e.u], state.positions[e.v]),
          config.min_distance));
    }
    weighted = topology.with_weights(lengths);
    WhispersConfig wc = whispers;
    wc.seed = mix_seed(whispers.seed, static_cast<std::uint64_t>(++recluster_count), 0);
    state.assignment = chinese_whispers(weighted, wc).assignment;
    state.centroids = all_centroids(state.assignment, state.positions);
    state.medoids = canvas_medoids(state.assignment, state.positions);
    gate = medoid_pairs(state.medoids, topology);
    last_recluster = state.iteration;
  };

  const auto enter_centroid_phase = [&]() {
    state.phase = LayoutPhase::kCentroidGravity;
    result.phase_history.emplace_back(state.iteration,
                                      LayoutPhase::kCentroidGravity);
    recluster();
  };

  if (gate.pairs.size() < kMinGatePairs) enter_centroid_phase();

  while (true) {
    state.elapsed_s = seconds_since(start);
    if (state.elapsed_s >= config.time_budget_s) break;
    if (config.max_iterations > 0 && state.iteration >= config.max_iterations) {
      break;
    }
    const StepStats stats = step_in_place(state, weighted, config);

    double prop = medoid_proportionality(gate, state.positions);
    if (state.phase == LayoutPhase::kCenterGravity) {
      if (prop >= config.proportionality_threshold) enter_centroid_phase();
    } else if (state.iteration - last_recluster >= config.recluster_period) {
      recluster();
    }
    if (!std::isnan(prop)) result.final_proportionality = prop;

    state.elapsed_s = seconds_since(start);
    const TraceRow row{state.iteration, state.elapsed_s, prop, state.phase,
                       stats.total_displacement};
    result.trace.push_back(row);
    if (stats.total_displacement < config.convergence_factor * k) {
      result.converged = true;
    }
    if (observer && !observer(state, row)) {
      result.stopped_by_observer = true;
      break;
    }
    if (result.converged) break;
  }

  result.positions = std::move(state.positions);
  result.iterations = state.iteration;
  result.elapsed_s = seconds_since(start);
  result.assignment = std::move(state.assignment);
  return result;
}

LayoutResult run_fr_baseline(const Topology& topology,
                             const LayoutConfig& config,
                             const LayoutObserver& observer) {
  config.validate();
  const auto start = Clock::now();
  const std::size_t n = topology.node_count();
  const double a = config.canvas_size;
  const double k = ideal_k(config.expansion_multiplier, a, n);
  const double cap = config.effective_displacement_cap();
  const double d_min = config.min_distance;

  LayoutState state;
  state.positions = initial_positions(topology, config);
  state.temperature = cap;

  LayoutResult result;
  result.phase_history.emplace_back(0, LayoutPhase::kCenterGravity);
  result.final_proportionality = std::numeric_limits<double>::quiet_NaN();
  std::vector<Point2> disp(n);
  auto& pos = state.positions;

  while (true) {
    state.elapsed_s = seconds_since(start);
    if (state.elapsed_s >= config.time_budget_s) break;
    if (config.max_iterations > 0 && state.iteration >= config.max_iterations) {
      break;
    }
    std::fill(disp.begin(), disp.end(), Point2{});
    if (config.forces.repulsion) {
      for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
          const Point2 delta = pos[u] - pos[v];
          const double d = norm(delta);
          const Point2 dir = d < d_min ? jitter_direction(config.seed, u, v)
                                       : delta * (1.0 / d);
          const Point2 push = dir * (k * k / std::max(d, d_min));
          disp[u] += push;
          disp[v] -= push;
        }
      }
    }
    if (config.forces.attraction) {
      for (const Edge& e : topology.edges()) {
        const Point2 delta = pos[e.u] - pos[e.v];
        const double d = norm(delta);
        if (d == 0.0) continue;
        const Point2 pull = delta * (d / k);  // (delta / d) * d^2 / k
        disp[e.u] -= pull;
        disp[e.v] += pull;
      }
    }
    if (config.forces.gravity) {
      const Point2 center{a / 2, a / 2};
      for (NodeId u = 0; u < n; ++u) {
        const Point2 delta = center - pos[u];
        const double dist = norm(delta);
        if (dist > 0.0) {
          disp[u] += delta * (gravity_mag(k, config.gravity_coefficient, dist) / dist);
        }
      }
    }
    const StepStats stats = apply_displacements(pos, disp, state.temperature, a);
    ++state.iteration;
    state.temperature =
        cap * std::max(0.0, 1.0 - static_cast<double>(state.iteration) /
                                      config.fr_cooling_iterations);

    state.elapsed_s = seconds_since(start);
    const TraceRow row{state.iteration, state.elapsed_s,
                       std::numeric_limits<double>::quiet_NaN(),
                       LayoutPhase::kCenterGravity, stats.total_displacement};
    result.trace.push_back(row);
    if (stats.total_displacement < config.convergence_factor * k) {
      result.converged = true;
    }
    if (observer && !observer(state, row)) {
      result.stopped_by_observer = true;
      break;
    }
    if (result.converged) break;
  }

  result.positions = std::move(state.positions);
  result.iterations = state.iteration;
  result.elapsed_s = seconds_since(start);
  result.assignment = ClusterAssignment::singletons(n);
  return result;
}

std::string trace_to_csv(std::span<const TraceRow> trace) {
  std::string out = "iteration,elapsed_s,proportionality,phase,total_displacement\n";
  for (const TraceRow& r : trace) {
    out += std::to_string(r.iteration) + ',' + format_number(r.elapsed_s) + ',' +
           (std::isnan(r.proportionality) ? std::string()
                                          : format_number(r.proportionality)) +
           ',' + std::string(phase_name(r.phase)) + ',' +
           format_number(r.total_displacement) + '\n';
  }
  return out;
}

std::string clusters_to_csv(const ClusterAssignment& assignment) {
  std::string out = "node_id,label\n";
  for (std::size_t i = 0; i < assignment.node_count(); ++i) {
    out += std::to_string(i) + ',' + std::to_string(assignment.labels()[i]) + '\n';
  }
  return out;
}

}  // namespace cwbound
