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

#ifndef SPNAV_SENSING_LIDAR_H_
#define SPNAV_SENSING_LIDAR_H_

#include <optional>
#include <vector>

#include "spnav/world/geometry.h"
#include "spnav/world/scenario.h"

namespace spnav::sensing {

// Robot frame: +y is the heading, +x is lateral (left); bearings are
// counter-clockwise from the heading.
struct LidarMount {
  double x = 0.0;    // m, lateral
  double y = 0.0;    // m, along heading
  double yaw = 0.0;  // rad

  bool centered() const { return x == 0.0 && y == 0.0 && yaw == 0.0; }
  bool operator==(const LidarMount&) const = default;
};

inline constexpr double kMinRange = 0.05;  // m, floor applied to every reading

class LidarConfig {
 public:
  // `beam_count` overrides round(fov / resolution).
  LidarConfig(double fov_deg, double resolution_deg, double max_range, LidarMount mount = {},
              std::optional<int> beam_count = std::nullopt);

  // 360 deg, 0.33 deg (1080 beams), 5 m, centered: the training sensor.
  static LidarConfig Canonical();

  double fov_deg() const { return fov_deg_; }
  double resolution_deg() const { return resolution_deg_; }
  double max_range() const { return max_range_; }
  const LidarMount& mount() const { return mount_; }
  int beam_count() const { return beam_count_; }
  bool full_circle() const { return fov_deg_ >= 360.0; }
  // Actual angular spacing, fov / beam_count, in radians.
  double beam_spacing() const;

  // Sensor-frame beam angles. A full circle starts at -pi so that beams fall
  // on the axes when n is a multiple of 4; a partial fan is centred with a
  // half-spacing margin at each edge.
  const std::vector<double>& beam_angles() const { return beam_angles_; }

  bool operator==(const LidarConfig& o) const {
    return fov_deg_ == o.fov_deg_ && resolution_deg_ == o.resolution_deg_ &&
           max_range_ == o.max_range_ && mount_ == o.mount_ && beam_count_ == o.beam_count_;
  }

 private:
  double fov_deg_;
  double resolution_deg_;
  double max_range_;
  LidarMount mount_;
  int beam_count_;
  std::vector<double> beam_angles_;
};

struct Scan {
  std::vector<double> distances;    // m, in [kMinRange, max_range]
  std::vector<double> beam_angles;  // rad, sensor frame
  bool sensor_blocked = false;      // sensor origin was inside an obstacle
};

world::Pose2 SensorPose(const world::Pose2& robot, const LidarMount& mount);

Scan RaycastScan(const world::Scenario& scenario, const world::Pose2& robot,
                 const LidarConfig& cfg);

}  // namespace spnav::sensing

#endif  // SPNAV_SENSING_LIDAR_H_
