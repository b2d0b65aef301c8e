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

#ifndef SPNAV_WORLD_ROBOT_H_
#define SPNAV_WORLD_ROBOT_H_

#include <numbers>

#include "spnav/world/geometry.h"

namespace spnav::world {

inline constexpr double kRobotRadius = 0.2;          // m
inline constexpr double kMaxLinearVelocity = 0.5;    // m/s, forward only
inline constexpr double kMaxAngularVelocity = std::numbers::pi / 2.0;  // rad/s
inline constexpr double kControlPeriod = 0.1;        // s
inline constexpr int kMaxEpisodeSteps = 400;
inline constexpr double kGoalRadius = 0.3;           // m

struct RobotState {
  Pose2 pose;
  double v = 0.0;      // m/s
  double omega = 0.0;  // rad/s
  double radius = kRobotRadius;
};

struct Action {
  double v = 0.0;
  double omega = 0.0;
};

// Clamps into [0, v_max] x [-w_max, w_max]; logs a warning when it had to.
Action ClampAction(const Action& action);

// Unicycle integration over `dt`, exact along the circular arc. The returned
// state carries the (clamped) commanded velocities.
RobotState StepKinematics(const RobotState& state, const Action& action, double dt);

}  // namespace spnav::world

#endif  // SPNAV_WORLD_ROBOT_H_
