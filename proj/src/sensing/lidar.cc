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

#include "spnav/sensing/lidar.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <spdlog/spdlog.h>

#include "spnav/error.h"
#include "spnav/kernels/raycast.h"

namespace spnav::sensing {

LidarConfig::LidarConfig(double fov_deg, double resolution_deg, double max_range,
                         LidarMount mount, std::optional<int> beam_count)
    : fov_deg_(fov_deg), resolution_deg_(resolution_deg), max_range_(max_range), mount_(mount) {
  if (!(fov_deg > 0.0 && fov_deg <= 360.0)) {
    throw Error(ErrorCode::kInvalidArgument, "lidar fov must be in (0, 360]");
  }
  if (!(resolution_deg > 0.0)) throw Error(ErrorCode::kInvalidArgument, "lidar resolution must be > 0");
  if (!(max_range > 0.0)) throw Error(ErrorCode::kInvalidArgument, "lidar range must be > 0");
  beam_count_ = beam_count ? *beam_count : static_cast<int>(std::lround(fov_deg / resolution_deg));
  if (beam_count_ < 1) throw Error(ErrorCode::kInvalidArgument, "lidar must have at least one beam");

  const double spacing = beam_spacing();
  beam_angles_.resize(beam_count_);
  for (int i = 0; i < beam_count_; ++i) {
    beam_angles_[i] = full_circle() ? -std::numbers::pi + i * spacing
                                    : -0.5 * fov_deg_ * std::numbers::pi / 180.0 + (i + 0.5) * spacing;
  }
}

LidarConfig LidarConfig::Canonical() { return LidarConfig(360.0, 0.33, 5.0, {}, 1080); }

double LidarConfig::beam_spacing() const {
  return fov_deg_ * std::numbers::pi / 180.0 / beam_count_;
}

world::Pose2 SensorPose(const world::Pose2& robot, const LidarMount& mount) {
  const double c = std::cos(robot.theta), s = std::sin(robot.theta);
  // forward = (c, s), left = (-s, c)
  return {robot.x + mount.y * c - mount.x * s, robot.y + mount.y * s + mount.x * c,
          robot.theta + mount.yaw};
}

Scan RaycastScan(const world::Scenario& scenario, const world::Pose2& robot,
                 const LidarConfig& cfg) {
  Scan scan;
  scan.beam_angles = cfg.beam_angles();
  const world::Pose2 sensor = SensorPose(robot, cfg.mount());
  if (scenario.Clearance(sensor.position()) <= 0.0) {
    spdlog::warn("lidar origin ({}, {}) is inside an obstacle", sensor.x, sensor.y);
    scan.distances.assign(cfg.beam_count(), kMinRange);
    scan.sensor_blocked = true;
    return scan;
  }
  std::vector<double> world_angles(cfg.beam_count());
  for (int i = 0; i < cfg.beam_count(); ++i) world_angles[i] = sensor.theta + scan.beam_angles[i];
  scan.distances.resize(cfg.beam_count());
  kernels::CastRays(scenario.edges(), sensor.position(), world_angles, cfg.max_range(),
                    scan.distances);
  for (double& d : scan.distances) d = std::clamp(d, kMinRange, cfg.max_range());
  return scan;
}

}  // namespace spnav::sensing
