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

#ifndef SPNAV_SENSING_OBSERVATION_H_
#define SPNAV_SENSING_OBSERVATION_H_

#include <Eigen/Core>

#include "spnav/sensing/encoding.h"
#include "spnav/sensing/lidar.h"
#include "spnav/world/scenario.h"

namespace spnav::sensing {

// Everything the networks consume for one state. Stored single precision
// since replay memory holds hundreds of thousands of these; all network
// arithmetic is done in double.
struct Observation {
  Eigen::Matrix2Xf points;       // encoded obstacle points
  Eigen::VectorXf downsampled;   // reciprocal min-downsampled canonical scan
  Eigen::Vector4d goal;          // [d_g, phi_g, v, omega]
};

// Full-precision intermediate products of one sensor reading.
struct Perception {
  Scan scan;
  ObstaclePointSet points;
  std::vector<double> downsampled;
  GoalVelocityState goal;

  Observation ToObservation() const;
};

// Builds observations for a fixed sensor. The downsampled vector always comes
// from the scan padded onto `canonical`, so critics and the FC-Net baseline
// see the same layout whatever the sensor.
class Observer {
 public:
  explicit Observer(LidarConfig cfg, LidarConfig canonical = LidarConfig::Canonical());

  const LidarConfig& config() const { return cfg_; }
  const LidarConfig& canonical() const { return canonical_; }

  Perception Perceive(const world::Scenario& scenario, const world::RobotState& robot,
                      const world::Point& goal) const;
  Observation Observe(const world::Scenario& scenario, const world::RobotState& robot,
                      const world::Point& goal) const {
    return Perceive(scenario, robot, goal).ToObservation();
  }

 private:
  LidarConfig cfg_;
  LidarConfig canonical_;
};

}  // namespace spnav::sensing

#endif  // SPNAV_SENSING_OBSERVATION_H_
