// Copyright 2026 The spnav Authors
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

#ifndef SPNAV_WORLD_GEOMETRY_H_
#define SPNAV_WORLD_GEOMETRY_H_

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace spnav::world {

using Point = Eigen::Vector2d;

struct Segment {
  Point a;
  Point b;
};

struct Pose2 {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;  // rad, counter-clockwise from world +x

  Point position() const { return {x, y}; }
};

// Wraps an angle into (-pi, pi].
double NormalizeAngle(double angle);

double PointSegmentDistance(const Point& p, const Segment& s);

// Distance along the ray `origin + t * dir` (|dir| = 1) to the segment, if
// the ray hits it at t >= 0.
std::optional<double> RaySegmentDistance(const Point& origin, const Point& dir,
                                         const Segment& s);

// Simple polygon (convex or concave), vertices in order.
class Polygon {
 public:
  Polygon() = default;
  explicit Polygon(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  double SignedArea() const;
  // Even-odd rule; boundary points count as inside.
  bool Contains(const Point& p) const;
  std::vector<Segment> Edges() const;

 private:
  std::vector<Point> vertices_;
};

}  // namespace spnav::world

#endif  // SPNAV_WORLD_GEOMETRY_H_
