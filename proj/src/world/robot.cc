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

#include "spnav/world/robot.h"

#include <algorithm>
#include <cmath>

#include <spdlog/spdlog.h>

namespace spnav::world {
namespace {

// sin(x) / x, accurate near zero.
double Sinc(double x) {
  if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

}  // namespace

Action ClampAction(const Action& action) {
  Action out{std::clamp(action.v, 0.0, kMaxLinearVelocity),
             std::clamp(action.omega, -kMaxAngularVelocity, kMaxAngularVelocity)};
  if (out.v != action.v || out.omega != action.omega) {
    spdlog::warn("action ({}, {}) clamped to ({}, {})", action.v, action.omega, out.v, out.omega);
  }
  return out;
}

RobotState StepKinematics(const RobotState& state, const Action& action, double dt) {
  const Action cmd = ClampAction(action);
  RobotState next = state;
  const double half_turn = 0.5 * cmd.omega * dt;
  // Chord of the arc: length v*dt*sinc(w*dt/2), direction theta + w*dt/2.
  // Reduces to the straight-line update when w == 0.
  const double chord = cmd.v * dt * Sinc(half_turn);
  const double heading = state.pose.theta + half_turn;
  next.pose.x = state.pose.x + chord * std::cos(heading);
  next.pose.y = state.pose.y + chord * std::sin(heading);
  next.pose.theta = NormalizeAngle(state.pose.theta + cmd.omega * dt);
  next.v = cmd.v;
  next.omega = cmd.omega;
  return next;
}

}  // namespace spnav::world
