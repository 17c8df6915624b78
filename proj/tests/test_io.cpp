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

#include <filesystem>
#include <regex>

#include <gtest/gtest.h>

#include "cwbound/error.hpp"
#include "cwbound/svg.hpp"
#include "cwbound/topology_io.hpp"

namespace cwbound {
namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

TEST(LayoutCsv, RoundTrip) {
  const std::vector<Point2> pts{{0.1, 2.5}, {1e-7, 999.999}, {1.0 / 3.0, 42}};
  const std::string csv = layout_to_csv(pts);
  EXPECT_EQ(csv.substr(0, 11), "node_id,x,y");
  EXPECT_EQ(layout_from_csv(csv), pts);
}

TEST(LayoutCsv, Malformed) {
  EXPECT_THROW(layout_from_csv("node_id,x,y\n0,1\n"), Error);
  EXPECT_THROW(layout_from_csv("node_id,x,y\n1,1,1\n"), Error);
  EXPECT_THROW(layout_from_csv("node_id,x,y\n0,a,1\n"), Error);
}

TEST(FormatNumber, ShortestRoundTrip) {
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(3.0), "3");
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 123456.789, -2.5e10}) {
    EXPECT_EQ(std::stod(format_number(v)), v);
  }
}

TEST(Files, ReadWriteAndMissing) {
  const auto dir = std::filesystem::temp_directory_path() / "cwbound_io_test" / "nested";
  std::filesystem::remove_all(dir.parent_path());
  write_text_file(dir / "a.txt", "hello\n");
  EXPECT_EQ(read_text_file(dir / "a.txt"), "hello\n");
  try {
    read_text_file(dir / "missing.txt");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIoError);
    EXPECT_NE(std::string(e.what()).find("missing.txt"), std::string::npos);
  }
  const Topology t = Topology::build(3, {{0, 1, 2.5}, {1, 2, 0.25}});
  write_topology_file(dir / "t.json", {t, std::vector<NodeId>{2}});
  const TopologyDocument doc = read_topology_file(dir / "t.json");
  EXPECT_EQ(doc.topology, t);
  EXPECT_EQ(doc.ground_truth_boundary, std::vector<NodeId>{2});
  std::filesystem::remove_all(dir.parent_path());
}

TEST(Svg, TriangleElementCounts) {
  const std::vector<Point2> pts{{0, 0}, {10, 0}, {5, 8}};
  const std::vector<Edge> edges{{0, 1, 1}, {1, 2, 1}, {0, 2, 1}};
  const std::string svg = render_svg(pts, edges, {true, false, true}, {true, true, false});
  EXPECT_EQ(count(svg, "<circle"), 3u);
  EXPECT_EQ(count(svg, "<line"), 3u);
  EXPECT_EQ(count(svg, "class=\"tp\""), 1u);
  EXPECT_EQ(count(svg, "class=\"fn\""), 1u);
  EXPECT_EQ(count(svg, "class=\"fp\""), 1u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Svg, CirclesOnlyAndDeterministic) {
  const std::vector<Point2> pts{{0, 0}, {3, 4}};
  const std::string a = render_svg(pts, {}, {}, {});
  EXPECT_EQ(count(a, "<circle"), 2u);
  EXPECT_EQ(count(a, "<line"), 0u);
  EXPECT_EQ(a, render_svg(pts, {}, {}, {}));
  EXPECT_THROW(render_svg(pts, {}, {true}, {}), Error);
}

}  // namespace
}  // namespace cwbound
