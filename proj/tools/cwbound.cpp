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

// cwbound: generate networks, lay them out, detect boundary nodes and run
// benchmark grids from the command line.
//
// Exit status: 0 on success, 1 when a run or benchmark cell fails, 2 on
// invalid configuration or usage.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cwbound/boundary.hpp"
#include "cwbound/error.hpp"
#include "cwbound/experiment.hpp"
#include "cwbound/layout.hpp"
#include "cwbound/metrics.hpp"
#include "cwbound/netgen.hpp"
#include "cwbound/rng.hpp"
#include "cwbound/svg.hpp"
#include "cwbound/topology_io.hpp"

namespace fs = std::filesystem;
using namespace cwbound;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

fs::path default_out_dir() {
  const char* env = std::getenv("CWBOUND_OUT");
  return env && *env ? fs::path(env) : fs::path("cwbound_out");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// prediction.csv rows: node_id,predicted_boundary,truth_boundary
void read_prediction_csv(const std::string& text, std::vector<bool>& predicted,
                         std::vector<bool>& truth) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    unsigned long id = 0;
    int p = 0, t = 0;
    if (std::sscanf(line.c_str(), "%lu,%d,%d", &id, &p, &t) != 3 ||
        id != predicted.size()) {
      throw Error(ErrorCode::kParseError,
                  "prediction line " + std::to_string(line_no) + ": " + line);
    }
    predicted.push_back(p != 0);
    truth.push_back(t != 0);
  }
}

std::vector<bool> flags_from_ids(std::size_t n, const std::vector<NodeId>& ids) {
  std::vector<bool> flags(n, false);
  for (const NodeId id : ids) {
    if (id < n) flags[id] = true;
  }
  return flags;
}

// Layout knobs shared by `layout` and `bench`.
struct LayoutFlags {
  std::optional<double> canvas_size, expansion_multiplier, gravity, cooling,
      displacement_cap, proportionality, min_distance;
  std::optional<int> recluster_period, max_iterations;

  void add_to(CLI::App& app) {
    app.add_option("--canvas-size", canvas_size, "Canvas side length");
    app.add_option("--expansion-multiplier", expansion_multiplier,
                   "Multiplier m of the ideal pairwise distance");
    app.add_option("--gravity", gravity, "Gravitation coefficient G");
    app.add_option("--cooling", cooling, "Temperature factor per iteration");
    app.add_option("--displacement-cap", displacement_cap,
                   "Initial temperature (largest step)");
    app.add_option("--proportionality", proportionality,
                   "Correlation that switches to centroid gravity");
    app.add_option("--min-distance", min_distance, "Repulsion distance clamp");
    app.add_option("--recluster-period", recluster_period,
                   "Iterations between re-clusterings");
    app.add_option("--max-iterations", max_iterations, "Iteration limit, 0 for none");
  }

  void apply(LayoutConfig& c) const {
    if (canvas_size) c.canvas_size = *canvas_size;
    if (expansion_multiplier) c.expansion_multiplier = *expansion_multiplier;
    if (gravity) c.gravity_coefficient = *gravity;
    if (cooling) c.cooling_factor = *cooling;
    if (displacement_cap) c.displacement_cap = *displacement_cap;
    if (proportionality) c.proportionality_threshold = *proportionality;
    if (min_distance) c.min_distance = *min_distance;
    if (recluster_period) c.recluster_period = *recluster_period;
    if (max_iterations) c.max_iterations = *max_iterations;
  }
};

// ---------------------------------------------------------------------------

struct GenerateArgs {
  std::string shape = "doughnut";
  std::size_t nodes = 500;
  double degree = 8.0;
  std::uint64_t seed = 1;
  double boundary_fraction = kDefaultBoundaryFraction;
  double noise = 0.1;
  double scale = 1000.0;
  fs::path out_dir = default_out_dir();
};

int run_generate(const GenerateArgs& a) {
  ShapeSpec spec;
  spec.kind = parse_shape(a.shape);
  spec.scale = a.scale;
  if (!(a.noise >= 0.0 && a.noise < 1.0)) {
    throw Error(ErrorCode::kConfigError, "--noise must lie in [0, 1)");
  }
  const LabeledPointSet points =
      generate_points(spec, a.nodes, a.boundary_fraction, a.seed);
  const RadiusConnection conn = connect_by_radius(points, a.degree);
  const Topology topology =
      perturb_weights(conn.topology, points, a.noise, mix_seed(a.seed, 1, 0));
  write_topology_file(a.out_dir / "topology.json", {topology, points.boundary_ids()});
  write_text_file(a.out_dir / "points.csv", points_to_csv(points));
  std::printf("wrote %s: %zu nodes, %zu edges, radius %s, degree %s\n",
              (a.out_dir / "topology.json").c_str(), topology.node_count(),
              topology.edge_count(), format_number(conn.radius).c_str(),
              format_number(conn.achieved_degree).c_str());
  return kExitOk;
}

struct LayoutArgs {
  fs::path topology;
  std::string algorithm = "cwbound";
  double time_budget = 60.0;
  std::uint64_t seed = 1;
  std::optional<fs::path> init;
  bool invert_weights = false;
  fs::path out_dir = default_out_dir();
  LayoutFlags flags;
};

int run_layout(const LayoutArgs& a) {
  const TopologyDocument doc = read_topology_file(a.topology);
  LayoutConfig config;
  a.flags.apply(config);
  config.time_budget_s = a.time_budget;
  config.seed = mix_seed(a.seed, 2, 0);
  if (a.init) config.start_positions = layout_from_csv(read_text_file(*a.init));
  config.validate();
  WhispersConfig whispers;
  whispers.seed = mix_seed(a.seed, 3, 0);
  whispers.invert_weights = a.invert_weights;

  const LayoutResult r = parse_algorithm(a.algorithm) == Algorithm::kCwbound
                             ? run_cwbound(doc.topology, config, whispers)
                             : run_fr_baseline(doc.topology, config);
  write_text_file(a.out_dir / "layout.csv", layout_to_csv(r.positions));
  write_text_file(a.out_dir / "clusters.csv", clusters_to_csv(r.assignment));
  write_text_file(a.out_dir / "trace.csv", trace_to_csv(r.trace));
  std::printf("%s: %d iterations in %.2f s%s, %zu phase change(s)\n",
              a.algorithm.c_str(), r.iterations, r.elapsed_s,
              r.converged ? " (converged)" : "", r.phase_history.size() - 1);
  return kExitOk;
}

struct DetectArgs {
  fs::path topology;
  fs::path layout;
  std::optional<double> alpha;
  double alpha_factor = kDefaultAlphaFactor;
  fs::path out_dir = default_out_dir();
};

int run_detect(const DetectArgs& a) {
  const TopologyDocument doc = read_topology_file(a.topology);
  const std::vector<Point2> positions = layout_from_csv(read_text_file(a.layout));
  const std::size_t n = doc.topology.node_count();
  if (positions.size() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "layout has " + std::to_string(positions.size()) +
                    " rows, topology has " + std::to_string(n) + " nodes");
  }
  const double alpha =
      a.alpha.value_or(default_alpha(positions, doc.topology, a.alpha_factor));
  const BoundaryPrediction pred = extract_boundary(positions, alpha);
  const std::vector<NodeId> truth = doc.ground_truth_boundary.value_or(std::vector<NodeId>{});
  write_text_file(a.out_dir / "prediction.csv",
                  prediction_to_csv(n, pred.boundary_ids, truth));
  std::printf("alpha %s: %zu boundary node(s)\n", format_number(alpha).c_str(),
              pred.boundary_ids.size());
  if (doc.ground_truth_boundary) {
    const MetricsReport m = evaluate(pred, truth, n);
    write_text_file(a.out_dir / "metrics.json", metrics_to_json(m));
    const auto show = [](const std::optional<double>& v) {
      return v ? format_number(*v) : std::string("undefined");
    };
    std::printf("sensitivity %s  specificity %s  accuracy %s\n",
                show(m.sensitivity).c_str(), show(m.specificity).c_str(),
                show(m.accuracy).c_str());
  }
  return kExitOk;
}

struct RenderArgs {
  fs::path topology;
  fs::path layout;
  std::optional<fs::path> prediction;
  std::optional<fs::path> output;
  fs::path out_dir = default_out_dir();
};

int run_render(const RenderArgs& a) {
  const TopologyDocument doc = read_topology_file(a.topology);
  const std::vector<Point2> positions = layout_from_csv(read_text_file(a.layout));
  const std::size_t n = doc.topology.node_count();
  if (positions.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "layout and topology sizes differ");
  }
  std::vector<bool> predicted, truth;
  if (a.prediction) {
    read_prediction_csv(read_text_file(*a.prediction), predicted, truth);
    if (predicted.size() != n) {
      throw Error(ErrorCode::kInvalidArgument, "prediction and topology sizes differ");
    }
  } else if (doc.ground_truth_boundary) {
    truth = flags_from_ids(n, *doc.ground_truth_boundary);
  }
  const fs::path out = a.output.value_or(a.out_dir / "layout.svg");
  emit_svg(out, positions, doc.topology.edges(), predicted, truth);
  std::printf("wrote %s\n", out.c_str());
  return kExitOk;
}

struct BenchArgs {
  std::optional<fs::path> config;
  std::optional<std::string> shapes, algorithms, seeds, nodes, degrees;
  std::optional<double> time_budget, sensitivity_target, alpha, alpha_factor;
  std::optional<int> plateau_iters, eval_every, jobs;
  std::optional<fs::path> out_dir;
  bool sequential = false;
  bool no_artifacts = false;
  LayoutFlags flags;
};

template <typename T>
std::vector<T> parse_numbers(const std::string& text, const char* flag) {
  std::vector<T> out;
  for (const std::string& item : split_list(text)) {
    std::istringstream in(item);
    T v{};
    if (!(in >> v) || !in.eof()) {
      throw Error(ErrorCode::kConfigError,
                  std::string(flag) + ": not a number '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

int run_bench(const BenchArgs& a) {
  ExperimentConfig c;
  if (a.config) c = experiment_config_from_json(read_text_file(*a.config));
  if (c.shapes.empty() && !a.shapes) {
    for (const char* s : {"u_shape", "doughnut", "smile", "star"}) {
      c.shapes.push_back(ShapeSpec{parse_shape(s)});
    }
  }
  if (a.shapes) {
    c.shapes.clear();
    for (const std::string& s : split_list(*a.shapes)) {
      c.shapes.push_back(ShapeSpec{parse_shape(s)});
    }
  }
  if (a.algorithms) {
    c.algorithms.clear();
    for (const std::string& s : split_list(*a.algorithms)) {
      c.algorithms.push_back(parse_algorithm(s));
    }
  }
  if (a.seeds) c.seeds = parse_numbers<std::uint64_t>(*a.seeds, "--seed");
  if (a.nodes) c.node_counts = parse_numbers<std::size_t>(*a.nodes, "--nodes");
  if (a.degrees) c.target_avg_degrees = parse_numbers<double>(*a.degrees, "--degree");
  if (a.time_budget) c.time_budget_s = *a.time_budget;
  if (a.sensitivity_target) c.sensitivity_target = *a.sensitivity_target;
  if (a.alpha) c.alpha = *a.alpha;
  if (a.alpha_factor) c.alpha_factor = *a.alpha_factor;
  if (a.plateau_iters) c.plateau_iters = *a.plateau_iters;
  if (a.eval_every) c.eval_every = *a.eval_every;
  if (a.jobs) c.jobs = *a.jobs;
  if (a.sequential) c.jobs = 1;
  if (a.no_artifacts) c.write_artifacts = false;
  if (a.out_dir) {
    c.out_dir = *a.out_dir;
  } else if (!a.config || std::getenv("CWBOUND_OUT")) {
    c.out_dir = default_out_dir();
  }
  a.flags.apply(c.layout);
  c.validate();

  const ExperimentOutcome outcome = run_experiment(c);
  std::fputs(summary_header().c_str(), stdout);
  for (const CellResult& r : outcome.cells) std::fputs(summary_row(r).c_str(), stdout);
  for (const std::string& f : outcome.failures) {
    std::fprintf(stderr, "cell failed: %s\n", f.c_str());
  }
  std::fprintf(stderr, "summary: %s\n", outcome.summary_path.c_str());
  return outcome.ok() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CWBound boundary node detection toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate a labeled network");
  generate->add_option("--shape", gen.shape, "u_shape, doughnut, smile or star")
      ->capture_default_str();
  generate->add_option("--nodes,-n", gen.nodes, "Node count")->capture_default_str();
  generate->add_option("--degree", gen.degree, "Target average degree")
      ->capture_default_str();
  generate->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  generate->add_option("--boundary-fraction", gen.boundary_fraction,
                       "Share of nodes placed on borders")
      ->capture_default_str();
  generate->add_option("--noise", gen.noise, "Relative edge weight noise")
      ->capture_default_str();
  generate->add_option("--scale", gen.scale, "Shape bounding box size")
      ->capture_default_str();
  generate->add_option("--out-dir,-o", gen.out_dir, "Output directory");

  LayoutArgs lay;
  auto* layout = app.add_subcommand("layout", "Lay out a topology");
  layout->add_option("topology", lay.topology, "topology.json")->required();
  layout->add_option("--algorithm", lay.algorithm, "cwbound or fr")
      ->capture_default_str();
  layout->add_option("--time-budget", lay.time_budget, "Seconds")->capture_default_str();
  layout->add_option("--seed", lay.seed, "Random seed")->capture_default_str();
  layout->add_option("--init", lay.init, "Start from this layout.csv");
  layout->add_flag("--invert-weights", lay.invert_weights,
                   "Cluster votes weigh 1/distance");
  layout->add_option("--out-dir,-o", lay.out_dir, "Output directory");
  lay.flags.add_to(*layout);

  DetectArgs det;
  auto* detect = app.add_subcommand("detect", "Predict boundary nodes of a layout");
  detect->add_option("topology", det.topology, "topology.json")->required();
  detect->add_option("layout", det.layout, "layout.csv")->required();
  detect->add_option("--alpha", det.alpha, "Alpha shape radius");
  detect->add_option("--alpha-factor", det.alpha_factor,
                     "Alpha as a multiple of the mean edge length")
      ->capture_default_str();
  detect->add_option("--out-dir,-o", det.out_dir, "Output directory");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Run a benchmark grid");
  bench->add_option("--config", bench_args.config, "JSON experiment config");
  bench->add_option("--shapes", bench_args.shapes, "Comma-separated shapes");
  bench->add_option("--algorithms", bench_args.algorithms, "cwbound,fr");
  bench->add_option("--seed,--seeds", bench_args.seeds, "Comma-separated seeds");
  bench->add_option("--nodes", bench_args.nodes, "Comma-separated node counts");
  bench->add_option("--degree", bench_args.degrees, "Comma-separated average degrees");
  bench->add_option("--time-budget", bench_args.time_budget, "Seconds per cell");
  bench->add_option("--sensitivity-target", bench_args.sensitivity_target,
                    "Stop a cell once reached");
  bench->add_option("--plateau-iters", bench_args.plateau_iters,
                    "Evaluations without change before stopping");
  bench->add_option("--eval-every", bench_args.eval_every,
                    "Iterations between evaluations");
  bench->add_option("--alpha", bench_args.alpha, "Fixed alpha shape radius");
  bench->add_option("--alpha-factor", bench_args.alpha_factor,
                    "Alpha as a multiple of the mean edge length");
  bench->add_option("--jobs,-j", bench_args.jobs, "Concurrent cells");
  bench->add_flag("--sequential", bench_args.sequential, "Run cells one at a time");
  bench->add_flag("--no-artifacts", bench_args.no_artifacts,
                  "Only write summary.csv");
  bench->add_option("--out-dir,-o", bench_args.out_dir, "Output directory");
  bench_args.flags.add_to(*bench);

  RenderArgs ren;
  auto* render = app.add_subcommand("render", "Draw a layout as SVG");
  render->add_option("topology", ren.topology, "topology.json")->required();
  render->add_option("layout", ren.layout, "layout.csv")->required();
  render->add_option("--prediction", ren.prediction, "prediction.csv to color nodes");
  render->add_option("--output", ren.output, "SVG path (default OUT_DIR/layout.svg)");
  render->add_option("--out-dir,-o", ren.out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;  // --help exits 0
  }

  try {
    if (*generate) return run_generate(gen);
    if (*layout) return run_layout(lay);
    if (*detect) return run_detect(det);
    if (*bench) return run_bench(bench_args);
    if (*render) return run_render(ren);
  } catch (const Error& e) {
    std::fprintf(stderr, "cwbound: %s\n", e.what());
    switch (e.code()) {
      case ErrorCode::kConfigError:
      case ErrorCode::kDegenerateShape:
        return kExitConfig;
      default:
        return kExitFailure;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "cwbound: %s\n", e.what());
    return kExitFailure;
  }
  return kExitFailure;
}
