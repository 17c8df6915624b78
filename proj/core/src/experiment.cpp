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

#include "cwbound/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "cwbound/boundary.hpp"
#include "cwbound/error.hpp"
#include "cwbound/rng.hpp"
#include "cwbound/svg.hpp"
#include "cwbound/topology_io.hpp"
#include "json.hpp"

namespace cwbound {
using nlohmann::json;

std::string_view algorithm_name(Algorithm algorithm) {
  return algorithm == Algorithm::kCwbound ? "cwbound" : "fr";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "cwbound") return Algorithm::kCwbound;
  if (name == "fr") return Algorithm::kFr;
  throw Error(ErrorCode::kConfigError,
              "unknown algorithm '" + std::string(name) + "' (expected cwbound or fr)");
}

std::string_view stop_reason_name(StopReason reason) {
  switch (reason) {
    case StopReason::kTarget: return "target";
    case StopReason::kPlateau: return "plateau";
    case StopReason::kConverged: return "converged";
    case StopReason::kTimeBudget: return "time_budget";
    case StopReason::kIterationLimit: return "iteration_limit";
  }
  return "unknown";
}

void ExperimentConfig::validate() const {
  const auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kConfigError, what);
  };
  if (shapes.empty()) fail("shapes must not be empty");
  if (node_counts.empty()) fail("node_counts must not be empty");
  if (target_avg_degrees.empty()) fail("target_avg_degrees must not be empty");
  if (algorithms.empty()) fail("algorithms must not be empty");
  if (seeds.empty()) fail("seeds must not be empty");
  if (!(sensitivity_target > 0.0 && sensitivity_target <= 1.0)) {
    fail("sensitivity_target must lie in (0, 1]");
  }
  if (plateau_iters < 1) fail("plateau_iters must be >= 1");
  if (eval_every < 1) fail("eval_every must be >= 1");
  if (!(time_budget_s > 0.0)) fail("time_budget must be positive");
  if (!(boundary_fraction > 0.0 && boundary_fraction < 1.0)) {
    fail("boundary_fraction must lie in (0, 1)");
  }
  if (!(weight_noise >= 0.0 && weight_noise < 1.0)) fail("noise must lie in [0, 1)");
  if (alpha && !(*alpha > 0.0)) fail("alpha must be positive");
  if (!(alpha_factor > 0.0)) fail("alpha_factor must be positive");
  if (jobs < 1) fail("jobs must be >= 1");
  for (const std::size_t n : node_counts) {
    if (n < 3) fail("node counts must be >= 3");
  }
  layout.validate();
}

namespace {

ShapeSpec shape_from_json(const json& j) {
  ShapeSpec s;
  if (j.is_string()) {
    s.kind = parse_shape(j.get<std::string>());
    return s;
  }
  static const std::set<std::string> known{"kind", "scale", "doughnut_inner_ratio",
                                           "star_points", "star_inner_ratio"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) {
      throw Error(ErrorCode::kConfigError, "unknown shape field '" + key + "'");
    }
  }
  s.kind = parse_shape(j.at("kind").get<std::string>());
  s.scale = j.value("scale", s.scale);
  s.doughnut_inner_ratio = j.value("doughnut_inner_ratio", s.doughnut_inner_ratio);
  s.star_points = j.value("star_points", s.star_points);
  s.star_inner_ratio = j.value("star_inner_ratio", s.star_inner_ratio);
  return s;
}

json shape_to_json(const ShapeSpec& s) {
  return {{"kind", std::string(shape_name(s.kind))},
          {"scale", s.scale},
          {"doughnut_inner_ratio", s.doughnut_inner_ratio},
          {"star_points", s.star_points},
          {"star_inner_ratio", s.star_inner_ratio}};
}

void reject_unknown(const json& j, const std::set<std::string>& known,
                    const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) {
      throw Error(ErrorCode::kConfigError,
                  "unknown " + where + " field '" + key + "'");
    }
  }
}

void layout_from_json(const json& j, LayoutConfig& c) {
  reject_unknown(j,
                 {"canvas_size", "expansion_multiplier", "gravity_coefficient",
                  "proportionality_threshold", "recluster_period",
                  "displacement_cap", "cooling_factor", "min_distance", "seed",
                  "max_iterations", "convergence_factor",
                  "init_from_estimated_distance", "fr_cooling_iterations"},
                 "layout");
  c.canvas_size = j.value("canvas_size", c.canvas_size);
  c.expansion_multiplier = j.value("expansion_multiplier", c.expansion_multiplier);
  c.gravity_coefficient = j.value("gravity_coefficient", c.gravity_coefficient);
  c.proportionality_threshold =
      j.value("proportionality_threshold", c.proportionality_threshold);
  c.recluster_period = j.value("recluster_period", c.recluster_period);
  if (j.contains("displacement_cap") && !j["displacement_cap"].is_null()) {
    c.displacement_cap = j["displacement_cap"].get<double>();
  }
  c.cooling_factor = j.value("cooling_factor", c.cooling_factor);
  c.min_distance = j.value("min_distance", c.min_distance);
  c.seed = j.value("seed", c.seed);
  c.max_iterations = j.value("max_iterations", c.max_iterations);
  c.convergence_factor = j.value("convergence_factor", c.convergence_factor);
  c.init_from_estimated_distance =
      j.value("init_from_estimated_distance", c.init_from_estimated_distance);
  c.fr_cooling_iterations = j.value("fr_cooling_iterations", c.fr_cooling_iterations);
}

json layout_to_json(const LayoutConfig& c) {
  json j{{"canvas_size", c.canvas_size},
         {"expansion_multiplier", c.expansion_multiplier},
         {"gravity_coefficient", c.gravity_coefficient},
         {"proportionality_threshold", c.proportionality_threshold},
         {"recluster_period", c.recluster_period},
         {"cooling_factor", c.cooling_factor},
         {"min_distance", c.min_distance},
         {"max_iterations", c.max_iterations},
         {"convergence_factor", c.convergence_factor},
         {"init_from_estimated_distance", c.init_from_estimated_distance},
         {"fr_cooling_iterations", c.fr_cooling_iterations}};
  j["displacement_cap"] = c.displacement_cap ? json(*c.displacement_cap) : json(nullptr);
  return j;
}

void whispers_from_json(const json& j, WhispersConfig& c) {
  reject_unknown(j, {"delta", "stable_iters", "max_iters", "invert_weights"},
                 "whispers");
  c.delta = j.value("delta", c.delta);
  c.stable_iters = j.value("stable_iters", c.stable_iters);
  c.max_iters = j.value("max_iters", c.max_iters);
  c.invert_weights = j.value("invert_weights", c.invert_weights);
}

}  // namespace

ExperimentConfig experiment_config_from_json(std::string_view text) {
  ExperimentConfig c;
  try {
    const json j = json::parse(text);
    if (!j.is_object()) {
      throw Error(ErrorCode::kConfigError, "config must be a JSON object");
    }
    reject_unknown(j,
                   {"shapes", "node_counts", "target_avg_degrees", "algorithms",
                    "time_budget", "sensitivity_target", "plateau_iters", "seeds",
                    "out_dir", "eval_every", "boundary_fraction", "noise", "alpha",
                    "alpha_factor", "degree_tolerance", "jobs", "write_artifacts",
                    "layout", "whispers"},
                   "experiment");
    if (j.contains("shapes")) {
      c.shapes.clear();
      for (const json& s : j["shapes"]) c.shapes.push_back(shape_from_json(s));
    }
    if (j.contains("node_counts")) c.node_counts = j["node_counts"].get<std::vector<std::size_t>>();
    if (j.contains("target_avg_degrees")) {
      c.target_avg_degrees = j["target_avg_degrees"].get<std::vector<double>>();
    }
    if (j.contains("algorithms")) {
      c.algorithms.clear();
      for (const json& a : j["algorithms"]) {
        c.algorithms.push_back(parse_algorithm(a.get<std::string>()));
      }
    }
    c.time_budget_s = j.value("time_budget", c.time_budget_s);
    c.sensitivity_target = j.value("sensitivity_target", c.sensitivity_target);
    c.plateau_iters = j.value("plateau_iters", c.plateau_iters);
    if (j.contains("seeds")) c.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
    if (j.contains("out_dir")) c.out_dir = j["out_dir"].get<std::string>();
    c.eval_every = j.value("eval_every", c.eval_every);
    c.boundary_fraction = j.value("boundary_fraction", c.boundary_fraction);
    c.weight_noise = j.value("noise", c.weight_noise);
    if (j.contains("alpha") && !j["alpha"].is_null()) c.alpha = j["alpha"].get<double>();
    c.alpha_factor = j.value("alpha_factor", c.alpha_factor);
    c.degree_tolerance = j.value("degree_tolerance", c.degree_tolerance);
    c.jobs = j.value("jobs", c.jobs);
    c.write_artifacts = j.value("write_artifacts", c.write_artifacts);
    if (j.contains("layout")) layout_from_json(j["layout"], c.layout);
    if (j.contains("whispers")) whispers_from_json(j["whispers"], c.whispers);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfigError, e.what());
  }
  return c;
}

std::string experiment_config_to_json(const ExperimentConfig& c) {
  json j;
  j["shapes"] = json::array();
  for (const ShapeSpec& s : c.shapes) j["shapes"].push_back(shape_to_json(s));
  j["node_counts"] = c.node_counts;
  j["target_avg_degrees"] = c.target_avg_degrees;
  j["algorithms"] = json::array();
  for (const Algorithm a : c.algorithms) j["algorithms"].push_back(std::string(algorithm_name(a)));
  j["time_budget"] = c.time_budget_s;
  j["sensitivity_target"] = c.sensitivity_target;
  j["plateau_iters"] = c.plateau_iters;
  j["seeds"] = c.seeds;
  j["out_dir"] = c.out_dir.string();
  j["eval_every"] = c.eval_every;
  j["boundary_fraction"] = c.boundary_fraction;
  j["noise"] = c.weight_noise;
  j["alpha"] = c.alpha ? json(*c.alpha) : json(nullptr);
  j["alpha_factor"] = c.alpha_factor;
  j["degree_tolerance"] = c.degree_tolerance;
  j["jobs"] = c.jobs;
  j["write_artifacts"] = c.write_artifacts;
  j["layout"] = layout_to_json(c.layout);
  j["whispers"] = {{"delta", c.whispers.delta},
                   {"stable_iters", c.whispers.stable_iters},
                   {"max_iters", c.whispers.max_iters},
                   {"invert_weights", c.whispers.invert_weights}};
  return j.dump(2) + "\n";
}

std::string CellSpec::name() const {
  std::ostringstream out;
  out << shape_name(shape.kind) << "_n" << nodes << "_d" << format_number(degree)
      << "_" << algorithm_name(algorithm) << "_s" << seed;
  return out.str();
}

std::vector<CellSpec> expand_cells(const ExperimentConfig& config) {
  std::vector<CellSpec> cells;
  for (const ShapeSpec& shape : config.shapes) {
    for (const std::size_t n : config.node_counts) {
      for (const double degree : config.target_avg_degrees) {
        for (const Algorithm algorithm : config.algorithms) {
          for (const std::uint64_t seed : config.seeds) {
            cells.push_back({shape, n, degree, algorithm, seed});
          }
        }
      }
    }
  }
  return cells;
}

CellNetwork build_cell_network(const CellSpec& cell,
                               const ExperimentConfig& config) {
  LabeledPointSet points =
      generate_points(cell.shape, cell.nodes, config.boundary_fraction, cell.seed);
  RadiusConnection connection =
      connect_by_radius(points, cell.degree, config.degree_tolerance);
  Topology topology = perturb_weights(connection.topology, points,
                                      config.weight_noise, mix_seed(cell.seed, 1, 0));
  std::vector<NodeId> truth = points.boundary_ids();
  return {std::move(points), std::move(connection), std::move(topology),
          std::move(truth)};
}

namespace {

std::string evaluations_trace_csv(const LayoutResult& layout,
                                  const std::vector<Evaluation>& evaluations) {
  std::string out =
      "iteration,elapsed_s,proportionality,phase,total_displacement,"
      "sensitivity,specificity,accuracy\n";
  const auto rate = [](const std::optional<double>& v) {
    return v ? format_number(*v) : std::string();
  };
  std::size_t next = 0;
  const auto emit_eval = [&](const Evaluation& ev) {
    out += rate(ev.metrics.sensitivity) + ',' + rate(ev.metrics.specificity) + ',' +
           rate(ev.metrics.accuracy);
  };
  // Evaluation at iteration 0 (before any step) has no layout row.
  while (next < evaluations.size() && evaluations[next].iteration == 0) {
    out += "0," + format_number(evaluations[next].elapsed_s) + ",,,,";
    emit_eval(evaluations[next]);
    out += '\n';
    ++next;
  }
  for (const TraceRow& r : layout.trace) {
    out += std::to_string(r.iteration) + ',' + format_number(r.elapsed_s) + ',' +
           (std::isnan(r.proportionality) ? std::string()
                                          : format_number(r.proportionality)) +
           ',' + std::string(phase_name(r.phase)) + ',' +
           format_number(r.total_displacement) + ',';
    if (next < evaluations.size() && evaluations[next].iteration == r.iteration) {
      emit_eval(evaluations[next]);
      ++next;
    } else {
      out += ",,";
    }
    out += '\n';
  }
  return out;
}

std::string cell_metrics_json(const CellResult& r) {
  json j = json::parse(metrics_to_json(r.final_metrics));
  j["cell"] = r.spec.name();
  j["shape"] = std::string(shape_name(r.spec.shape.kind));
  j["nodes"] = r.spec.nodes;
  j["target_avg_degree"] = r.spec.degree;
  j["achieved_avg_degree"] = r.achieved_degree;
  j["radius"] = r.radius;
  j["algorithm"] = std::string(algorithm_name(r.spec.algorithm));
  j["seed"] = r.spec.seed;
  j["iterations"] = r.iterations;
  j["stop_reason"] = std::string(stop_reason_name(r.stop_reason));
  j["time_to_target_s"] = r.time_to_target_s ? json(*r.time_to_target_s) : json(nullptr);
  j["final_proportionality"] = std::isnan(r.layout.final_proportionality)
                                   ? json(nullptr)
                                   : json(r.layout.final_proportionality);
  return j.dump(2) + "\n";
}

}  // namespace

CellResult run_cell(const CellSpec& cell, const ExperimentConfig& config) {
  const CellNetwork net = build_cell_network(cell, config);
  const std::size_t n = net.topology.node_count();

  CellResult result;
  result.spec = cell;
  result.radius = net.connection.radius;
  result.achieved_degree = net.connection.achieved_degree;

  const auto evaluate_positions = [&](std::span<const Point2> positions) {
    const double alpha = config.alpha.value_or(
        default_alpha(positions, net.topology, config.alpha_factor));
    const BoundaryPrediction prediction = extract_boundary(positions, alpha);
    return std::make_pair(prediction, evaluate(prediction, net.truth, n));
  };

  bool target_hit = false;
  bool plateau_hit = false;
  double plateau_ref = -1.0;
  int plateau_count = 0;
  const auto observer = [&](const LayoutState& state, const TraceRow& row) {
    if (row.iteration % config.eval_every != 0) return true;
    auto [prediction, metrics] = evaluate_positions(state.positions);
    metrics.elapsed_s = row.elapsed_s;
    result.evaluations.push_back({row.iteration, row.elapsed_s, metrics});
    const double sens = metrics.sensitivity.value_or(0.0);
    if (sens >= config.sensitivity_target) {
      target_hit = true;
      result.time_to_target_s = row.elapsed_s;
      return false;
    }
    if (std::abs(sens - plateau_ref) <= 1e-3) {
      if (++plateau_count >= config.plateau_iters) {
        plateau_hit = true;
        return false;
      }
    } else {
      plateau_ref = sens;
      plateau_count = 0;
    }
    return true;
  };

  LayoutConfig layout = config.layout;
  layout.time_budget_s = config.time_budget_s;
  layout.seed = mix_seed(cell.seed, 2, 0);
  WhispersConfig whispers = config.whispers;
  whispers.seed = mix_seed(cell.seed, 3, 0);
  result.layout = cell.algorithm == Algorithm::kCwbound
                      ? run_cwbound(net.topology, layout, whispers, observer)
                      : run_fr_baseline(net.topology, layout, observer);
  result.iterations = result.layout.iterations;
  result.elapsed_s = result.layout.elapsed_s;

  // Final score comes from the final layout.
  auto [prediction, final_metrics] = evaluate_positions(result.layout.positions);
  final_metrics.elapsed_s = result.layout.elapsed_s;
  if (result.evaluations.empty() ||
      result.evaluations.back().iteration != result.iterations) {
    result.evaluations.push_back({result.iterations, result.layout.elapsed_s, final_metrics});
    if (!target_hit &&
        final_metrics.sensitivity.value_or(0.0) >= config.sensitivity_target) {
      target_hit = true;
      result.time_to_target_s = result.layout.elapsed_s;
    }
  }
  result.final_metrics = final_metrics;

  if (target_hit) {
    result.stop_reason = StopReason::kTarget;
  } else if (plateau_hit) {
    result.stop_reason = StopReason::kPlateau;
  } else if (result.layout.converged) {
    result.stop_reason = StopReason::kConverged;
  } else if (layout.max_iterations > 0 && result.iterations >= layout.max_iterations) {
    result.stop_reason = StopReason::kIterationLimit;
  } else {
    result.stop_reason = StopReason::kTimeBudget;
  }

  if (config.write_artifacts) {
    result.directory = config.out_dir / cell.name();
    const auto& dir = result.directory;
    std::vector<bool> predicted(n, false);
    std::vector<bool> truth(n, false);
    for (const NodeId id : prediction.boundary_ids) predicted[id] = true;
    for (const NodeId id : net.truth) truth[id] = true;
    write_topology_file(dir / "topology.json", {net.topology, net.truth});
    write_text_file(dir / "points.csv", points_to_csv(net.points));
    write_text_file(dir / "layout.csv", layout_to_csv(result.layout.positions));
    write_text_file(dir / "clusters.csv", clusters_to_csv(result.layout.assignment));
    write_text_file(dir / "trace.csv",
                    evaluations_trace_csv(result.layout, result.evaluations));
    write_text_file(dir / "prediction.csv",
                    prediction_to_csv(n, prediction.boundary_ids, net.truth));
    write_text_file(dir / "metrics.json", cell_metrics_json(result));
    emit_svg(dir / "layout.svg", result.layout.positions, net.topology.edges(),
             predicted, truth);
  }
  return result;
}

std::string summary_header() {
  return "shape,n,degree,algorithm,seed,sensitivity,specificity,accuracy,"
         "iterations,stop_reason,cell_dir,time_to_target_s,elapsed_s\n";
}

std::string summary_row(const CellResult& r) {
  const auto rate = [](const std::optional<double>& v) {
    return v ? format_number(*v) : std::string();
  };
  return std::string(shape_name(r.spec.shape.kind)) + ',' +
         std::to_string(r.spec.nodes) + ',' + format_number(r.spec.degree) + ',' +
         std::string(algorithm_name(r.spec.algorithm)) + ',' +
         std::to_string(r.spec.seed) + ',' + rate(r.final_metrics.sensitivity) +
         ',' + rate(r.final_metrics.specificity) + ',' +
         rate(r.final_metrics.accuracy) + ',' + std::to_string(r.iterations) +
         ',' + std::string(stop_reason_name(r.stop_reason)) + ',' +
         (r.directory.empty() ? std::string() : r.spec.name()) + ',' +
         (r.time_to_target_s ? format_number(*r.time_to_target_s) : std::string()) +
         ',' + format_number(r.elapsed_s) + '\n';
}

ExperimentOutcome run_experiment(const ExperimentConfig& config) {
  config.validate();
  const std::vector<CellSpec> cells = expand_cells(config);
  ExperimentOutcome outcome;
  outcome.summary_path = config.out_dir / "summary.csv";

  std::vector<std::optional<CellResult>> results(cells.size());
  std::vector<std::string> errors(cells.size());
  const auto run_one = [&](std::size_t i) {
    try {
      results[i] = run_cell(cells[i], config);
    } catch (const std::exception& e) {
      errors[i] = cells[i].name() + ": " + e.what();
    }
  };

  const auto write_summary = [&]() {
    std::string summary = summary_header();
    for (const auto& r : results) {
      if (r) summary += summary_row(*r);
    }
    write_text_file(outcome.summary_path, summary);
  };

  if (config.jobs <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      run_one(i);
      write_summary();  // partial results survive a later failure
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    const auto worker_count = std::min<std::size_t>(
        static_cast<std::size_t>(config.jobs), cells.size());
    for (std::size_t w = 0; w < worker_count; ++w) {
      workers.emplace_back([&]() {
        for (std::size_t i = next++; i < cells.size(); i = next++) run_one(i);
      });
    }
    for (auto& t : workers) t.join();
    write_summary();
  }

  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (results[i]) {
      outcome.cells.push_back(std::move(*results[i]));
    } else {
      outcome.failures.push_back(errors[i]);
    }
  }
  return outcome;
}

}  // namespace cwbound
