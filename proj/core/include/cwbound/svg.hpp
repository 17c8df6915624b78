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

#ifndef CWBOUND_SVG_HPP_
#define CWBOUND_SVG_HPP_

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "cwbound/geometry.hpp"
#include "cwbound/graph.hpp"

namespace cwbound {

// Renders one <line> per edge and one <circle> per node. Node classes:
// tp (predicted and true boundary), fp, fn and tn, each with its own fill.
// Empty flag vectors mean "no prediction" / "no ground truth". Output depends
// only on the inputs.
std::string render_svg(std::span<const Point2> positions,
                       std::span<const Edge> edges,
                       const std::vector<bool>& predicted,
                       const std::vector<bool>& truth);

// render_svg written to path; throws kIoError.
void emit_svg(const std::filesystem::path& path,
              std::span<const Point2> positions, std::span<const Edge> edges,
              const std::vector<bool>& predicted,
              const std::vector<bool>& truth);

}  // namespace cwbound

#endif  // CWBOUND_SVG_HPP_
