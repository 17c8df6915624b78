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

#ifndef CWBOUND_TOPOLOGY_IO_HPP_
#define CWBOUND_TOPOLOGY_IO_HPP_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cwbound/geometry.hpp"
#include "cwbound/graph.hpp"

namespace cwbound {

// Interchange document shared by every stage:
//   {"node_count": n, "edges": [[u, v, weight], ...],
//    "ground_truth_boundary": [id, ...]}      // optional
struct TopologyDocument {
  Topology topology;
  std::optional<std::vector<NodeId>> ground_truth_boundary;
};

std::string topology_to_json(const Topology& topology,
                             const std::optional<std::vector<NodeId>>& truth =
                                 std::nullopt);
// Throws kParseError on malformed JSON and the build_topology errors on
// invalid content.
TopologyDocument topology_from_json(std::string_view text);

void write_topology_file(const std::filesystem::path& path,
                         const TopologyDocument& doc);
TopologyDocument read_topology_file(const std::filesystem::path& path);

// layout.csv: header "node_id,x,y", one row per node in id order.
std::string layout_to_csv(std::span<const Point2> positions);
std::vector<Point2> layout_from_csv(std::string_view text);

// Whole-file helpers; both throw kIoError naming the path.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// Fixed, locale-independent number formatting for reports: shortest string
// that round-trips the double.
std::string format_number(double value);

}  // namespace cwbound

#endif  // CWBOUND_TOPOLOGY_IO_HPP_
