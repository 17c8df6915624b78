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

#ifndef CWBOUND_TESTS_ARTIFACT_COMPARE_HPP_
#define CWBOUND_TESTS_ARTIFACT_COMPARE_HPP_

#include <filesystem>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cwbound/topology_io.hpp"
#include "json.hpp"

namespace cwbound::testing {

// Drops the named CSV columns (by header name) from every row.
inline std::string drop_csv_columns(const std::string& csv,
                                    const std::set<std::string>& names) {
  std::istringstream in(csv);
  std::string line, out;
  std::vector<bool> keep;
  bool header = true;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream row(line);
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (header) {
      for (const auto& c : cells) keep.push_back(!names.contains(c));
      header = false;
    }
    std::string joined;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i < keep.size() && !keep[i]) continue;
      if (!joined.empty() || i > 0) joined += ',';
      joined += cells[i];
    }
    out += joined + '\n';
  }
  return out;
}

// Cell artifacts with wall-clock fields removed, keyed by file name.
inline std::vector<std::pair<std::string, std::string>> timeless_artifacts(
    const std::filesystem::path& dir) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const char* name : {"topology.json", "points.csv", "layout.csv",
                           "clusters.csv", "prediction.csv", "layout.svg"}) {
    out.emplace_back(name, read_text_file(dir / name));
  }
  out.emplace_back("trace.csv",
                   drop_csv_columns(read_text_file(dir / "trace.csv"), {"elapsed_s"}));
  auto metrics = nlohmann::json::parse(read_text_file(dir / "metrics.json"));
  metrics.erase("elapsed_s");
  metrics.erase("time_to_target_s");
  out.emplace_back("metrics.json", metrics.dump());
  return out;
}

inline std::string timeless_summary(const std::filesystem::path& path) {
  return drop_csv_columns(read_text_file(path), {"time_to_target_s", "elapsed_s"});
}

}  // namespace cwbound::testing

#endif  // CWBOUND_TESTS_ARTIFACT_COMPARE_HPP_
