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

#include "spnav/sensing/observation.h"

namespace spnav::sensing {

Observation Perception::ToObservation() const {
  Observation obs;
  obs.points = points.encoded.cast<float>();
  obs.downsampled = Eigen::Map<const Eigen::VectorXd>(downsampled.data(),
                                                      static_cast<long>(downsampled.size()))
                        .cast<float>();
  obs.goal = goal.AsVector();
  return obs;
}

Observer::Observer(LidarConfig cfg, LidarConfig canonical)
    : cfg_(std::move(cfg)), canonical_(std::move(canonical)) {}

Perception Observer::Perceive(const world::Scenario& scenario, const world::RobotState& robot,
                              const world::Point& goal) const {
  Perception p;
  p.scan = RaycastScan(scenario, robot.pose, cfg_);
  p.points = ToPointSet(p.scan, cfg_);
  p.downsampled = MinDownsample(PadScanForFcNet(p.scan, cfg_, canonical_));
  p.goal = MakeGoalState(robot, goal);
  return p;
}

}  // namespace spnav::sensing
