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

#ifndef CWBOUND_LAYOUT_HPP_
#define CWBOUND_LAYOUT_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cwbound/geometry.hpp"
#include "cwbound/graph.hpp"
#include "cwbound/whispers.hpp"

namespace cwbound {

enum class LayoutPhase { kCenterGravity, kCentroidGravity };
std::string_view phase_name(LayoutPhase phase);

// Lets tests switch individual force families off.
struct ForceSwitches {
  bool repulsion = true;
  bool attraction = true;
  bool gravity = true;
};

struct LayoutConfig {
  double canvas_size = 1000.0;         // a: side of the square canvas
  double expansion_multiplier = 1.5;   // m
  double gravity_coefficient = 0.05;   // G
  double time_budget_s = 60.0;
  double proportionality_threshold = 0.9;
  int recluster_period = 10;
  std::optional<double> displacement_cap;  // defaults to canvas_size / 10
  double cooling_factor = 0.97;
  double min_distance = 1e-6;
  std::uint64_t seed = 1;
  // Hard iteration limit, 0 for none. Runs that must be reproducible
  // regardless of machine speed should set this or rely on convergence.
  int max_iterations = 0;
  // A sweep whose summed node displacement falls below
  // convergence_factor * k counts as converged.
  double convergence_factor = 1e-3;
  // Place nodes breadth-first at their estimated distances from an already
  // placed neighbor instead of uniformly at random.
  bool init_from_estimated_distance = false;
  // Explicit starting positions; when non-empty they replace the seeded
  // placement and must hold one point per node.
  std::vector<Point2> start_positions;
  // Linear cooling horizon of the Fruchterman-Reingold baseline.
  int fr_cooling_iterations = 500;
  ForceSwitches forces;

  double effective_displacement_cap() const {
    return displacement_cap.value_or(canvas_size / 10.0);
  }
  // Throws kConfigError naming the first invalid field.
  void validate() const;
};

// k = m * a / (n + 1).
double ideal_k(double expansion_multiplier, double canvas_size, std::size_t n);

// LinLog attraction: ln(1 + d * w).
double attraction_mag(double d, double w);

// Cluster-size scaled repulsion: size1 * size2 / max(d, d_min).
double repulsion_mag(std::size_t size1, std::size_t size2, double d,
                     double d_min = 1e-6);

// Gravity toward an attractor (canvas center or cluster centroid): k * G * d.
double gravity_mag(double k, double gravity_coefficient, double dist);

// Pearson correlation of two equal-length samples. Throws kDegenerateInput
// for mismatched or too-short inputs or a zero-variance sample.
double proportionality(std::span<const double> canvas_dists,
                       std::span<const double> est_dists);

struct LayoutState {
  std::vector<Point2> positions;
  LayoutPhase phase = LayoutPhase::kCenterGravity;
  ClusterAssignment assignment;
  std::map<ClusterLabel, NodeId> medoids;
  std::map<ClusterLabel, Point2> centroids;
  double temperature = 0.0;
  int iteration = 0;
  double elapsed_s = 0.0;
};

struct StepStats {
  double total_displacement = 0.0;
  double max_displacement = 0.0;
};

// One force sweep in three passes: repulsion over all unordered pairs,
// attraction along every edge, then gravity toward the active attractor. The
// per-node sum is capped at the current temperature, positions are clamped
// to the canvas and the temperature is multiplied by cooling_factor.
//
// Attraction uses w = edge weight / mean edge weight when both endpoints share
// a cluster and w = 1 otherwise; the weights are those of `topology`.
StepStats step_in_place(LayoutState& state, const Topology& topology,
                        const LayoutConfig& config);
LayoutState step(LayoutState state, const Topology& topology,
                 const LayoutConfig& config);

struct TraceRow {
  int iteration = 0;
  double elapsed_s = 0.0;
  double proportionality = 0.0;  // NaN when not evaluated
  LayoutPhase phase = LayoutPhase::kCenterGravity;
  double total_displacement = 0.0;
};

struct LayoutResult {
  std::vector<Point2> positions;
  int iterations = 0;
  double elapsed_s = 0.0;
  double final_proportionality = 0.0;  // NaN if never computed
  // (iteration at which the phase became active, phase)
  std::vector<std::pair<int, LayoutPhase>> phase_history;
  bool converged = false;
  bool stopped_by_observer = false;
  ClusterAssignment assignment;
  std::vector<TraceRow> trace;
};

// Called after every iteration; returning false stops the run.
using LayoutObserver =
    std::function<bool(const LayoutState& state, const TraceRow& row)>;

// Full pipeline: cluster on estimated distances, pick medoids by weighted
// shortest-path distance, place nodes at random, iterate with canvas-center
// gravity until medoid canvas distances correlate with their estimated
// distances at proportionality_threshold, then re-cluster on canvas edge
// lengths and switch to centroid gravity, re-clustering every
// recluster_period iterations. Stops on the time budget, max_iterations,
// convergence or the observer.
LayoutResult run_cwbound(const Topology& topology, const LayoutConfig& config,
                         const WhispersConfig& whispers,
                         const LayoutObserver& observer = {});

// Classical Fruchterman-Reingold: attraction d^2/k on edges, repulsion k^2/d
// on all pairs, gravity k*G*d toward the canvas center, linear cooling over
// fr_cooling_iterations.
LayoutResult run_fr_baseline(const Topology& topology,
                             const LayoutConfig& config,
                             const LayoutObserver& observer = {});

// Seeded initial placement used by both algorithms.
std::vector<Point2> initial_positions(const Topology& topology,
                                      const LayoutConfig& config);

// trace.csv: iteration,elapsed_s,proportionality,phase,total_displacement
std::string trace_to_csv(std::span<const TraceRow> trace);

// clusters.csv: node_id,label
std::string clusters_to_csv(const ClusterAssignment& assignment);

}  // namespace cwbound

#endif  // CWBOUND_LAYOUT_HPP_
