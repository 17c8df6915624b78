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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "cwbound/error.hpp"
#include "cwbound/graph.hpp"
#include "cwbound/topology_io.hpp"

namespace cwbound {
namespace {

Topology triangle() {
  return Topology::build(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no cwbound::Error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(Topology, TriangleAverageDegree) {
  EXPECT_DOUBLE_EQ(triangle().average_degree(), 2.0);
  EXPECT_EQ(triangle().edge_count(), 3u);
}

TEST(Topology, EdgelessAverageDegree) {
  const Topology t = Topology::build(5, {});
  EXPECT_DOUBLE_EQ(t.average_degree(), 0.0);
  EXPECT_TRUE(t.neighbors(0).empty());
}

TEST(Topology, CanonicalOrder) {
  const Topology t = Topology::build(3, {{2, 0, 1.5}, {1, 0, 2.0}});
  ASSERT_EQ(t.edge_count(), 2u);
  EXPECT_EQ(t.edges()[0], (Edge{0, 1, 2.0}));
  EXPECT_EQ(t.edges()[1], (Edge{0, 2, 1.5}));
}

TEST(Topology, ValidationErrors) {
  EXPECT_EQ(code_of([] { Topology::build(2, {{0, 1, 1}, {1, 0, 2}}); }),
            ErrorCode::kDuplicateEdge);
  EXPECT_EQ(code_of([] { Topology::build(2, {{1, 1, 1}}); }),
            ErrorCode::kSelfLoop);
  EXPECT_EQ(code_of([] { Topology::build(2, {{0, 1, 0.0}}); }),
            ErrorCode::kNonPositiveWeight);
  EXPECT_EQ(code_of([] { Topology::build(2, {{0, 1, -1.0}}); }),
            ErrorCode::kNonPositiveWeight);
  EXPECT_EQ(code_of([] { Topology::build(2, {{0, 1, NAN}}); }),
            ErrorCode::kNonPositiveWeight);
  EXPECT_EQ(code_of([] { Topology::build(2, {{0, 2, 1.0}}); }),
            ErrorCode::kIdOutOfRange);
  EXPECT_EQ(code_of([] { triangle().neighbors(3); }), ErrorCode::kIdOutOfRange);
}

TEST(Topology, ErrorNamesEdge) {
  try {
    Topology::build(4, {{0, 1, 1}, {3, 3, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find('3'), std::string::npos);
  }
}

TEST(Topology, Neighbors) {
  const Topology tri = triangle();
  const auto nb = tri.neighbors(0);
  ASSERT_EQ(nb.size(), 2u);
  EXPECT_EQ(nb[0], (Neighbor{1, 1.0}));
  EXPECT_EQ(nb[1], (Neighbor{2, 1.0}));

  const Topology star = Topology::build(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  EXPECT_EQ(star.degree(0), 3u);
  EXPECT_EQ(star.degree(2), 1u);
}

TEST(Topology, DegreeSumProperty) {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + gen() % 30;
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (gen() % 4 == 0) edges.push_back({u, v, 1.0 + gen() % 7});
      }
    }
    const Topology t = Topology::build(n, edges);
    std::size_t sum = 0;
    for (NodeId u = 0; u < n; ++u) {
      sum += t.degree(u);
      for (std::size_t i = 1; i < t.neighbors(u).size(); ++i) {
        EXPECT_LT(t.neighbors(u)[i - 1].id, t.neighbors(u)[i].id);
      }
    }
    EXPECT_EQ(sum, 2 * t.edge_count());
  }
}

TEST(Topology, JsonRoundTrip) {
  std::mt19937 gen(5);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < 40; ++u) {
    for (NodeId v = u + 1; v < 40; ++v) {
      if (gen() % 5 == 0) {
        edges.push_back({u, v, std::uniform_real_distribution<>(0.1, 50)(gen)});
      }
    }
  }
  const Topology t = Topology::build(40, edges);
  const std::vector<NodeId> truth{1, 4, 9};
  const TopologyDocument doc = topology_from_json(topology_to_json(t, truth));
  EXPECT_EQ(doc.topology, t);
  ASSERT_TRUE(doc.ground_truth_boundary.has_value());
  EXPECT_EQ(*doc.ground_truth_boundary, truth);

  const TopologyDocument plain = topology_from_json(topology_to_json(t));
  EXPECT_FALSE(plain.ground_truth_boundary.has_value());
}

TEST(Topology, JsonErrors) {
  EXPECT_EQ(code_of([] { topology_from_json("{not json"); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { topology_from_json(R"({"edges": []})"); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] {
              topology_from_json(R"({"node_count": 2, "edges": [[0, 0, 1]]})");
            }),
            ErrorCode::kSelfLoop);
}

TEST(ShortestPaths, WeightedAndUnreachable) {
  const Topology t =
      Topology::build(4, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 5.0}});
  const auto d = shortest_path_lengths(t, 0);
  EXPECT_DOUBLE_EQ(d[2], 2.0);
  EXPECT_TRUE(std::isinf(d[3]));
  EXPECT_EQ(connected_components(t).count, 2u);
}

// Independent evaluation of the free-space path loss model, written out
// term by term instead of calling the library.
double fspl_oracle(double f_mhz, double s_dbm) {
  const double exponent = (27.55 - 20.0 * std::log10(f_mhz) - s_dbm) / 20.0;
  return std::pow(10.0, exponent);
}

TEST(Fspl, UnitCase) {
  EXPECT_NEAR(estimated_distance_fspl({1.0, 27.55}), 1.0, 1e-12);
}

TEST(Fspl, FrozenValue) {
  // 10^((27.55 - 67.604 + 60) / 20) = 10^0.99729 ~ 9.938
  EXPECT_NEAR(estimated_distance_fspl({2400.0, -60.0}), 9.938, 1e-3);
  EXPECT_NEAR(estimated_distance_fspl({2400.0, -60.0}),
              fspl_oracle(2400.0, -60.0), 1e-12);
}

TEST(Fspl, Monotone) {
  EXPECT_LT(estimated_distance_fspl({2400.0, -40.0}),
            estimated_distance_fspl({2400.0, -60.0}));
  EXPECT_LT(estimated_distance_fspl({5000.0, -60.0}),
            estimated_distance_fspl({2400.0, -60.0}));
  double prev = INFINITY;
  for (double s = -100.0; s <= 30.0; s += 0.5) {
    const double d = estimated_distance_fspl({900.0, s});
    EXPECT_GT(d, 0.0);
    EXPECT_LT(d, prev);
    prev = d;
  }
}

TEST(Fspl, InverseRecoversSignal) {
  for (double f : {1.0, 433.0, 2400.0, 5800.0}) {
    for (double s = -90.0; s <= 20.0; s += 2.5) {
      const double d = estimated_distance_fspl({f, s});
      EXPECT_NEAR(signal_strength_for_distance(f, d), s, 1e-9);
      EXPECT_NEAR(27.55 - 20 * std::log10(f) - 20 * std::log10(d), s, 1e-9);
    }
  }
}

TEST(Fspl, RejectsBadFrequency) {
  EXPECT_THROW(estimated_distance_fspl({0.0, -60.0}), Error);
  EXPECT_THROW(estimated_distance_fspl({-5.0, -60.0}), Error);
}

}  // namespace
}  // namespace cwbound
