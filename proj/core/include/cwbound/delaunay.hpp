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

#ifndef CWBOUND_DELAUNAY_HPP_
#define CWBOUND_DELAUNAY_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "cwbound/geometry.hpp"

namespace cwbound {

// Delaunay triangulation by incremental Bowyer-Watson insertion inside a
// large enclosing triangle. The three enclosing vertices are kept (ids
// n, n+1, n+2) so that faces touching them stand for the unbounded outside.
class Delaunay {
 public:
  struct Triangle {
    std::array<std::uint32_t, 3> v;  // counter-clockwise
  };

  explicit Delaunay(std::span<const Point2> points);

  std::size_t point_count() const { return n_; }
  // Includes triangles incident to the enclosing vertices.
  const std::vector<Triangle>& triangles() const { return triangles_; }
  bool is_outer_vertex(std::uint32_t id) const { return id >= n_; }
  bool touches_outside(const Triangle& t) const {
    return t.v[0] >= n_ || t.v[1] >= n_ || t.v[2] >= n_;
  }
  // Triangle across edge i (opposite vertex v[i]) or -1.
  int neighbor(std::size_t triangle, int edge) const {
    return adjacency_[triangle][static_cast<std::size_t>(edge)];
  }
  // Circumradius of a triangle over the (possibly perturbed) input points.
  double circumradius(const Triangle& t) const;

  const std::vector<Point2>& vertices() const { return vertices_; }

 private:
  std::size_t n_ = 0;
  std::vector<Point2> vertices_;  // input points (perturbed) + enclosing ones
  std::vector<Triangle> triangles_;
  std::vector<std::array<int, 3>> adjacency_;
};

}  // namespace cwbound

#endif  // CWBOUND_DELAUNAY_HPP_
