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

#include "cwbound/topology_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "cwbound/error.hpp"
#include "json.hpp"

namespace cwbound {

using nlohmann::json;

std::string topology_to_json(const Topology& topology,
                             const std::optional<std::vector<NodeId>>& truth) {
  json doc;
  doc["node_count"] = topology.node_count();
  json edges = json::array();
  for (const Edge& e : topology.edges()) edges.push_back({e.u, e.v, e.weight});
  doc["edges"] = std::move(edges);
  if (truth) doc["ground_truth_boundary"] = *truth;
  return doc.dump(1) + "\n";
}

TopologyDocument topology_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  try {
    const auto n = doc.at("node_count").get<long long>();
    if (n < 1) throw Error(ErrorCode::kInvalidArgument, "node_count < 1");
    std::vector<Edge> edges;
    for (const json& row : doc.at("edges")) {
      if (!row.is_array() || row.size() != 3) {
        throw Error(ErrorCode::kParseError,
                    "edge rows must be [u, v, weight]: " + row.dump());
      }
      const auto u = row[0].get<long long>();
      const auto v = row[1].get<long long>();
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw Error(ErrorCode::kIdOutOfRange, "edge " + row.dump());
      }
      edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v),
                       row[2].get<double>()});
    }
    TopologyDocument out{
        Topology::build(static_cast<std::size_t>(n), std::move(edges)),
        std::nullopt};
    if (doc.contains("ground_truth_boundary") &&
        !doc["ground_truth_boundary"].is_null()) {
      std::vector<NodeId> truth;
      for (const json& id : doc["ground_truth_boundary"]) {
        const auto value = id.get<long long>();
        if (value < 0 || value >= n) {
          throw Error(ErrorCode::kIdOutOfRange,
                      "ground_truth_boundary id " + std::to_string(value));
        }
        truth.push_back(static_cast<NodeId>(value));
      }
      out.ground_truth_boundary = std::move(truth);
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

void write_topology_file(const std::filesystem::path& path,
                         const TopologyDocument& doc) {
  write_text_file(path,
                  topology_to_json(doc.topology, doc.ground_truth_boundary));
}

TopologyDocument read_topology_file(const std::filesystem::path& path) {
  return topology_from_json(read_text_file(path));
}

std::string layout_to_csv(std::span<const Point2> positions) {
  std::string out = "node_id,x,y\n";
  for (std::size_t i = 0; i < positions.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += format_number(positions[i].x);
    out += ',';
    out += format_number(positions[i].y);
    out += '\n';
  }
  return out;
}

std::vector<Point2> layout_from_csv(std::string_view text) {
  std::vector<Point2> positions;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line.rfind("node_id", 0) == 0) continue;
    }
    std::istringstream row(line);
    std::string id, x, y;
    if (!std::getline(row, id, ',') || !std::getline(row, x, ',') ||
        !std::getline(row, y, ',')) {
      throw Error(ErrorCode::kParseError,
                  "layout line " + std::to_string(line_no) + ": " + line);
    }
    try {
      const auto node = std::stoull(id);
      if (node != positions.size()) {
        throw Error(ErrorCode::kParseError,
                    "layout rows must be in id order at line " +
                        std::to_string(line_no));
      }
      positions.push_back({std::stod(x), std::stod(y)});
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kParseError,
                  "layout line " + std::to_string(line_no) + ": " + line);
    }
  }
  return positions;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path.string());
}

std::string format_number(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

}  // namespace cwbound
