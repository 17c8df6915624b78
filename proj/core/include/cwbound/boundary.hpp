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

#ifndef CWBOUND_BOUNDARY_HPP_
#define CWBOUND_BOUNDARY_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cwbound/geometry.hpp"
#include "cwbound/graph.hpp"

namespace cwbound {

struct BoundaryPrediction {
  std::vector<NodeId> boundary_ids;        // outer boundary, ascending
  std::vector<NodeId> inner_boundary_ids;  // hole borders, diagnostics only
  double alpha = 0.0;
  std::vector<NodeId> hull;  // longest outer boundary cycle, in order
  bool degenerate = false;   // fewer than 3 points: everything is boundary

  bool contains(NodeId id) const;
};

// Alpha shape of the laid-out points: Delaunay triangles with circumradius
// <= alpha form the shape. A point is on the outer boundary when it touches
// the unbounded complement, i.e. a face reachable from outside the convex hull
// through removed triangles. Points only touching enclosed removed regions are
// inner-boundary points. With fewer than 3 points all are returned and the
// prediction is flagged degenerate. Throws kInvalidArgument for alpha <= 0.
BoundaryPrediction extract_boundary(std::span<const Point2> positions,
                                    double alpha);

inline constexpr double kDefaultAlphaFactor = 1.5;

// factor * mean canvas length of the topology's edges. Falls back to the
// bounding-box diagonal for an edgeless graph.
double default_alpha(std::span<const Point2> positions,
                     const Topology& topology,
                     double factor = kDefaultAlphaFactor);

}  // namespace cwbound

#endif  // CWBOUND_BOUNDARY_HPP_
