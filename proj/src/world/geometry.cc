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

#include "spnav/world/geometry.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace spnav::world {

double NormalizeAngle(double angle) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  // In-range angles pass through bit-exact.
  if (angle > -std::numbers::pi && angle <= std::numbers::pi) return angle;
  double wrapped = std::fmod(angle + std::numbers::pi, kTwoPi);
  if (wrapped < 0.0) wrapped += kTwoPi;
  wrapped -= std::numbers::pi;
  // fmod maps +pi to -pi; the range is half-open on the other side.
  if (wrapped <= -std::numbers::pi) wrapped += kTwoPi;
  return wrapped;
}

double PointSegmentDistance(const Point& p, const Segment& s) {
  const Point ab = s.b - s.a;
  const double len2 = ab.squaredNorm();
  if (len2 == 0.0) return (p - s.a).norm();
  const double t = std::clamp((p - s.a).dot(ab) / len2, 0.0, 1.0);
  return (p - (s.a + t * ab)).norm();
}

std::optional<double> RaySegmentDistance(const Point& origin, const Point& dir,
                                         const Segment& s) {
  const Point e = s.b - s.a;
  const double denom = dir.x() * e.y() - dir.y() * e.x();
  if (std::abs(denom) < 1e-15) return std::nullopt;  // parallel
  const Point w = s.a - origin;
  const double t = (w.x() * e.y() - w.y() * e.x()) / denom;
  const double u = (w.x() * dir.y() - w.y() * dir.x()) / denom;
  if (t < 0.0 || u < 0.0 || u > 1.0) return std::nullopt;
  return t;
}

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {}

double Polygon::SignedArea() const {
  double area = 0.0;
  const size_t n = vertices_.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& p = vertices_[i];
    const Point& q = vertices_[(i + 1) % n];
    area += p.x() * q.y() - q.x() * p.y();
  }
  return 0.5 * area;
}

bool Polygon::Contains(const Point& p) const {
  const size_t n = vertices_.size();
  bool inside = false;
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[j];
    if (PointSegmentDistance(p, {a, b}) == 0.0) return true;
    if ((a.y() > p.y()) != (b.y() > p.y())) {
      const double x_cross = (b.x() - a.x()) * (p.y() - a.y()) / (b.y() - a.y()) + a.x();
      if (p.x() < x_cross) inside = !inside;
    }
  }
  return inside;
}

std::vector<Segment> Polygon::Edges() const {
  std::vector<Segment> edges;
  edges.reserve(vertices_.size());
  for (size_t i = 0; i < vertices_.size(); ++i) {
    edges.push_back({vertices_[i], vertices_[(i + 1) % vertices_.size()]});
  }
  return edges;
}

}  // namespace spnav::world
