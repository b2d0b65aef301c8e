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

#ifndef SPNAV_SENSING_ENCODING_H_
#define SPNAV_SENSING_ENCODING_H_

#include <span>
#include <vector>

#include <Eigen/Core>

#include "spnav/sensing/lidar.h"
#include "spnav/world/robot.h"

namespace spnav::sensing {

// Unordered obstacle points in the robot frame. Column i of `encoded` is
// (sin(a_i) / d_i, cos(a_i) / d_i) for bearing a_i and range d_i.
struct ObstaclePointSet {
  Eigen::Matrix2Xd encoded;
  std::vector<double> bearings;  // rad, robot frame
  std::vector<double> ranges;    // m, from the robot centre

  int size() const { return static_cast<int>(encoded.cols()); }
  // Robot-frame coordinates (d sin a, d cos a), the same component order as
  // `encoded`.
  Eigen::Matrix2Xd Coordinates() const;
};

Eigen::Vector2d EncodePoint(double bearing, double range);
// Inverse of EncodePoint: returns (bearing, range).
std::pair<double, double> DecodePoint(const Eigen::Vector2d& p);

// Maps each beam endpoint into the robot frame. Max-range beams are kept.
ObstaclePointSet ToPointSet(const Scan& scan, const LidarConfig& cfg);

inline constexpr int kDownsampleBins = 36;
inline constexpr int kDownsampleWindow = 30;

// y_i = 1 / min(window i). Trailing beams beyond bins * window are ignored.
std::vector<double> MinDownsample(std::span<const double> distances, int bins = kDownsampleBins,
                                  int window = kDownsampleWindow);

// Bearing differences below this count as ties when matching beams.
inline constexpr double kAngleTieEpsilon = 1e-9;  // rad

// Resamples `scan` onto the canonical beam layout: each canonical direction
// takes the nearest actual beam within half a spacing of either sensor, else
// the canonical max range (unscanned space is treated as free). Equidistant
// beams resolve to the lowest beam index.
std::vector<double> PadScanForFcNet(const Scan& scan, const LidarConfig& cfg,
                                    const LidarConfig& canonical);

// g = [d_g, phi_g, v, omega].
struct GoalVelocityState {
  double distance = 0.0;
  double bearing = 0.0;
  double v = 0.0;
  double omega = 0.0;

  Eigen::Vector4d AsVector() const { return {distance, bearing, v, omega}; }
};

GoalVelocityState MakeGoalState(const world::RobotState& robot, const world::Point& goal);

}  // namespace spnav::sensing

#endif  // SPNAV_SENSING_ENCODING_H_
