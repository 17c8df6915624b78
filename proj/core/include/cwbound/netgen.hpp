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

#ifndef CWBOUND_NETGEN_HPP_
#define CWBOUND_NETGEN_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cwbound/geometry.hpp"
#include "cwbound/graph.hpp"

namespace cwbound {

enum class ShapeKind { kUShape, kDoughnut, kSmile, kStar };

std::string_view shape_name(ShapeKind kind);
// Accepts "u_shape", "doughnut", "smile", "star". Throws kConfigError.
ShapeKind parse_shape(std::string_view name);

struct ShapeSpec {
  ShapeKind kind = ShapeKind::kDoughnut;
  double scale = 1000.0;            // side of the bounding box, canvas units
  double doughnut_inner_ratio = 0.4;  // hole radius / outer radius
  int star_points = 5;
  double star_inner_ratio = 0.5;    // valley radius / tip radius
};

// Closed polyline; the last vertex connects back to the first.
using Polyline = std::vector<Point2>;

// The border of a shape. outer encloses the region; holes are removed from
// it. Curved borders use kBorderResolution segments; polygonal borders are
// subdivided to the same total.
struct ShapeGeometry {
  Polyline outer;
  std::vector<Polyline> holes;
};

inline constexpr int kBorderResolution = 256;

// Throws kDegenerateShape for an invalid spec.
ShapeGeometry shape_geometry(const ShapeSpec& spec);

// Even-odd test against the outer border and every hole.
bool inside_region(const ShapeGeometry& geometry, Point2 p);
double distance_to_border(const ShapeGeometry& geometry, Point2 p);
double distance_to_polyline(const Polyline& polyline, Point2 p);

// Tolerance within which a point counts as lying on a border: scale / 200.
double border_tolerance(const ShapeSpec& spec);

inline constexpr double kDefaultBoundaryFraction = 0.25;

struct LabeledPointSet {
  std::vector<Point2> positions;
  std::vector<bool> is_boundary;        // on the outer border (positive class)
  std::vector<bool> is_inner_boundary;  // on a hole border (not positive)
  ShapeSpec shape;
  std::uint64_t seed = 0;

  std::size_t size() const { return positions.size(); }
  std::vector<NodeId> boundary_ids() const;
};

// round(n * boundary_fraction) points go uniformly along the concatenated
// border polylines (flagged outer or inner by the polyline they land on); the
// rest are uniform in the region at distance > border_tolerance from every
// border. Ids are shuffled so that the boundary is not a contiguous block.
// Throws kEmptyNetwork for n < 3, kDegenerateShape, or kInvalidArgument for
// a fraction outside (0, 1).
LabeledPointSet generate_points(const ShapeSpec& shape, std::size_t n,
                                double boundary_fraction, std::uint64_t seed);

struct RadiusConnection {
  Topology topology;
  double radius = 0.0;
  double achieved_degree = 0.0;
};

inline constexpr double kDefaultDegreeTolerance = 0.25;

// Unit-disk graph: every pair within radius r is joined with weight equal to
// the Euclidean distance. r is bisected (40 steps over [0, bounding-box
// diagonal]) until the average degree is within tol of the target. Throws
// kUnreachableDegree when the target exceeds n - 1 or no bisection endpoint
// lands within tol, and kInvalidArgument for a target below 1.
RadiusConnection connect_by_radius(const LabeledPointSet& points,
                                   double target_avg_degree,
                                   double tol = kDefaultDegreeTolerance);

// Multiplies each edge's true length by an independent uniform factor in
// [1 - noise, 1 + noise]. Throws kInvalidArgument unless 0 <= noise < 1.
Topology perturb_weights(const Topology& topology,
                         const LabeledPointSet& true_positions, double noise,
                         std::uint64_t seed);

// points.csv: id,x,y,is_boundary,is_inner_boundary
std::string points_to_csv(const LabeledPointSet& points);

}  // namespace cwbound

#endif  // CWBOUND_NETGEN_HPP_
