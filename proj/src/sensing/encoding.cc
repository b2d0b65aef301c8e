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

#include "spnav/sensing/encoding.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "spnav/error.h"
#include "spnav/world/geometry.h"

namespace spnav::sensing {

Eigen::Matrix2Xd ObstaclePointSet::Coordinates() const {
  Eigen::Matrix2Xd xy(2, size());
  for (int i = 0; i < size(); ++i) {
    xy(0, i) = ranges[i] * std::sin(bearings[i]);
    xy(1, i) = ranges[i] * std::cos(bearings[i]);
  }
  return xy;
}

Eigen::Vector2d EncodePoint(double bearing, double range) {
  return {std::sin(bearing) / range, std::cos(bearing) / range};
}

std::pair<double, double> DecodePoint(const Eigen::Vector2d& p) {
  return {std::atan2(p[0], p[1]), 1.0 / p.norm()};
}

ObstaclePointSet ToPointSet(const Scan& scan, const LidarConfig& cfg) {
  const int n = static_cast<int>(scan.distances.size());
  ObstaclePointSet set;
  set.encoded.resize(2, n);
  set.bearings.resize(n);
  set.ranges.resize(n);
  const LidarMount& m = cfg.mount();
  for (int i = 0; i < n; ++i) {
    double bearing, range;
    if (m.centered()) {
      bearing = world::NormalizeAngle(scan.beam_angles[i]);
      range = scan.distances[i];
    } else {
      const double a = scan.beam_angles[i] + m.yaw;
      const double forward = m.y + scan.distances[i] * std::cos(a);
      const double left = m.x + scan.distances[i] * std::sin(a);
      bearing = std::atan2(left, forward);
      range = std::max(std::hypot(forward, left), kMinRange);
    }
    set.bearings[i] = bearing;
    set.ranges[i] = range;
    set.encoded.col(i) = EncodePoint(bearing, range);
  }
  return set;
}

std::vector<double> MinDownsample(std::span<const double> distances, int bins, int window) {
  if (bins < 1 || window < 1) throw Error(ErrorCode::kInvalidArgument, "downsample sizes must be >= 1");
  if (static_cast<size_t>(bins) * window > distances.size()) {
    throw Error(ErrorCode::kShapeMismatch,
                "downsample needs " + std::to_string(bins * window) + " beams, scan has " +
                    std::to_string(distances.size()));
  }
  std::vector<double> y(bins);
  for (int i = 0; i < bins; ++i) {
    const auto first = distances.begin() + static_cast<long>(i) * window;
    y[i] = 1.0 / *std::min_element(first, first + window);
  }
  return y;
}

std::vector<double> PadScanForFcNet(const Scan& scan, const LidarConfig& cfg,
                                    const LidarConfig& canonical) {
  const double max_range = canonical.max_range();
  if (cfg == canonical) {
    std::vector<double> out = scan.distances;
    for (double& d : out) d = std::min(d, max_range);
    return out;
  }
  const ObstaclePointSet points = ToPointSet(scan, cfg);
  const int n = points.size();
  // Beams sorted by (bearing, index) so ties resolve to the lowest index.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return points.bearings[a] != points.bearings[b] ? points.bearings[a] < points.bearings[b] : a < b;
  });
  std::vector<double> sorted(n);
  for (int i = 0; i < n; ++i) sorted[i] = points.bearings[order[i]];

  const double tolerance = 0.5 * cfg.beam_spacing() + 0.5 * canonical.beam_spacing();
  const double two_pi = 2.0 * std::numbers::pi;
  const std::vector<double>& canon_angles = canonical.beam_angles();
  std::vector<double> out(canon_angles.size(), max_range);
  for (size_t c = 0; c < canon_angles.size(); ++c) {
    const double target = world::NormalizeAngle(canon_angles[c]);
    auto gap_of = [&](int k) { return std::abs(world::NormalizeAngle(sorted[k] - target)); };
    const int pos = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), target) - sorted.begin());
    double best_gap = std::min({gap_of(pos % n), gap_of((pos + n - 1) % n), gap_of(0), gap_of(n - 1)});
    if (best_gap > tolerance + kAngleTieEpsilon) continue;
    // Every beam within the tie band of the nearest one, including across
    // the +-pi seam; the lowest beam index among them wins.
    const double lo = target - best_gap - kAngleTieEpsilon;
    const double hi = target + best_gap + kAngleTieEpsilon;
    int best_beam = std::numeric_limits<int>::max();
    auto scan_range = [&](double a, double b) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), a);
      for (; it != sorted.end() && *it <= b; ++it) {
        const int k = static_cast<int>(it - sorted.begin());
        if (gap_of(k) <= best_gap + kAngleTieEpsilon) best_beam = std::min(best_beam, order[k]);
      }
    };
    scan_range(lo, hi);
    if (lo < -std::numbers::pi) scan_range(lo + two_pi, std::numbers::pi);
    if (hi > std::numbers::pi) scan_range(-std::numbers::pi, hi - two_pi);
    out[c] = std::min(points.ranges[best_beam], max_range);
  }
  return out;
}

GoalVelocityState MakeGoalState(const world::RobotState& robot, const world::Point& goal) {
  const double dx = goal.x() - robot.pose.x, dy = goal.y() - robot.pose.y;
  const double c = std::cos(robot.pose.theta), s = std::sin(robot.pose.theta);
  const double forward = dx * c + dy * s;
  const double left = -dx * s + dy * c;
  GoalVelocityState g;
  g.distance = std::hypot(dx, dy);
  g.bearing = world::NormalizeAngle(std::atan2(left, forward));
  g.v = robot.v;
  g.omega = robot.omega;
  return g;
}

}  // namespace spnav::sensing
