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

#include <benchmark/benchmark.h>

#include <map>

#include "cwbound/boundary.hpp"
#include "cwbound/layout.hpp"
#include "cwbound/netgen.hpp"
#include "cwbound/whispers.hpp"

namespace {

using namespace cwbound;

struct Network {
  LabeledPointSet points;
  Topology topology;
};

// Generated once per size; benchmarks only time the operation itself.
const Network& network(std::size_t n) {
  static std::map<std::size_t, Network> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    LabeledPointSet pts = generate_points(ShapeSpec{ShapeKind::kDoughnut}, n, 0.25, 1);
    Topology t = perturb_weights(connect_by_radius(pts, 8.0).topology, pts, 0.1, 1);
    it = cache.emplace(n, Network{std::move(pts), std::move(t)}).first;
  }
  return it->second;
}

void BM_LayoutStep(benchmark::State& state) {
  const Network& net = network(static_cast<std::size_t>(state.range(0)));
  LayoutConfig config;
  config.cooling_factor = 1.0;
  LayoutState s;
  s.positions = initial_positions(net.topology, config);
  s.assignment = chinese_whispers(net.topology, {}).assignment;
  s.temperature = config.effective_displacement_cap();
  for (auto _ : state) {
    benchmark::DoNotOptimize(step_in_place(s, net.topology, config));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LayoutStep)->RangeMultiplier(2)->Range(125, 1000)->Complexity();

void BM_FrIterations(benchmark::State& state) {
  const Network& net = network(static_cast<std::size_t>(state.range(0)));
  LayoutConfig config;
  config.max_iterations = 10;
  config.time_budget_s = 1e9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_fr_baseline(net.topology, config));
  }
}
BENCHMARK(BM_FrIterations)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_ChineseWhispers(benchmark::State& state) {
  const Network& net = network(static_cast<std::size_t>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    WhispersConfig c;
    c.seed = ++seed;
    benchmark::DoNotOptimize(chinese_whispers(net.topology, c));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ChineseWhispers)->RangeMultiplier(2)->Range(125, 2000)->Complexity();

void BM_ExtractBoundary(benchmark::State& state) {
  const Network& net = network(static_cast<std::size_t>(state.range(0)));
  const double alpha = default_alpha(net.points.positions, net.topology);
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_boundary(net.points.positions, alpha));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExtractBoundary)->RangeMultiplier(2)->Range(125, 2000)->Complexity();

void BM_ConnectByRadius(benchmark::State& state) {
  const Network& net = network(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(connect_by_radius(net.points, 8.0));
  }
}
BENCHMARK(BM_ConnectByRadius)->Arg(500)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
