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

#ifndef CWBOUND_EXPERIMENT_HPP_
#define CWBOUND_EXPERIMENT_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cwbound/layout.hpp"
#include "cwbound/metrics.hpp"
#include "cwbound/netgen.hpp"
#include "cwbound/whispers.hpp"

namespace cwbound {

enum class Algorithm { kCwbound, kFr };
std::string_view algorithm_name(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view name);  // throws kConfigError

struct ExperimentConfig {
  std::vector<ShapeSpec> shapes;
  std::vector<std::size_t> node_counts{500};
  std::vector<double> target_avg_degrees{8.0};
  std::vector<Algorithm> algorithms{Algorithm::kCwbound, Algorithm::kFr};
  double time_budget_s = 60.0;
  double sensitivity_target = 0.9;
  int plateau_iters = 100;  // consecutive evaluations with unchanged sensitivity
  std::vector<std::uint64_t> seeds{1};
  std::filesystem::path out_dir = "cwbound_out";

  int eval_every = 10;
  double boundary_fraction = kDefaultBoundaryFraction;
  double weight_noise = 0.1;
  double degree_tolerance = kDefaultDegreeTolerance;
  std::optional<double> alpha;  // fixed alpha; otherwise alpha_factor * mean edge
  double alpha_factor = kDefaultAlphaFactor;
  int jobs = 1;
  bool write_artifacts = true;

  LayoutConfig layout;
  WhispersConfig whispers;

  // Throws kConfigError naming the first invalid field.
  void validate() const;
};

// Reads the JSON form; field names follow ExperimentConfig ("time_budget"
// for time_budget_s). Unknown fields are rejected. Throws kConfigError.
ExperimentConfig experiment_config_from_json(std::string_view text);
std::string experiment_config_to_json(const ExperimentConfig& config);

struct CellSpec {
  ShapeSpec shape;
  std::size_t nodes = 0;
  double degree = 0.0;
  Algorithm algorithm = Algorithm::kCwbound;
  std::uint64_t seed = 0;

  std::string name() const;
};

struct Evaluation {
  int iteration = 0;
  double elapsed_s = 0.0;
  MetricsReport metrics;
};

enum class StopReason { kTarget, kPlateau, kConverged, kTimeBudget, kIterationLimit };
std::string_view stop_reason_name(StopReason reason);

struct CellResult {
  CellSpec spec;
  MetricsReport final_metrics;
  std::optional<double> time_to_target_s;
  int iterations = 0;
  double elapsed_s = 0.0;
  StopReason stop_reason = StopReason::kConverged;
  double radius = 0.0;
  double achieved_degree = 0.0;
  std::vector<Evaluation> evaluations;
  LayoutResult layout;
  std::filesystem::path directory;  // empty when artifacts are not written
};

// The generated network for a cell: points, unit-disk topology with noisy
// weights, and the outer-boundary ground truth.
struct CellNetwork {
  LabeledPointSet points;
  RadiusConnection connection;
  Topology topology;  // connection.topology with perturbed weights
  std::vector<NodeId> truth;
};
CellNetwork build_cell_network(const CellSpec& cell,
                               const ExperimentConfig& config);

// Runs one cell: generate, lay out with evaluation every eval_every
// iterations, stop at the sensitivity target or on a plateau, and (if
// write_artifacts) write trace.csv, metrics.json, layout.svg, layout.csv,
// prediction.csv, clusters.csv and topology.json under
// out_dir / cell.name().
CellResult run_cell(const CellSpec& cell, const ExperimentConfig& config);

// All cells in shape, node count, degree, algorithm, seed order.
std::vector<CellSpec> expand_cells(const ExperimentConfig& config);

struct ExperimentOutcome {
  std::vector<CellResult> cells;
  std::vector<std::string> failures;  // "cell-name: message"
  std::filesystem::path summary_path;
  bool ok() const { return failures.empty(); }
};

// Runs every cell (concurrently when jobs > 1) and writes summary.csv. A
// failing cell is reported in failures; other cells still run.
ExperimentOutcome run_experiment(const ExperimentConfig& config);

// summary.csv columns; time_to_target_s and elapsed_s are the wall-clock
// columns.
std::string summary_header();
std::string summary_row(const CellResult& result);

}  // namespace cwbound

#endif  // CWBOUND_EXPERIMENT_HPP_
