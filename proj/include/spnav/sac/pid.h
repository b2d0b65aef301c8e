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

#ifndef SPNAV_SAC_PID_H_
#define SPNAV_SAC_PID_H_

#include "spnav/sensing/encoding.h"
#include "spnav/world/robot.h"

namespace spnav::sac {

inline constexpr double kWarmupHeadingGain = 1.5;

// Warm-up controller: proportional heading control toward the goal, no
// obstacle term. omega = clamp(k_p * phi_g), v = v_max * max(0, cos phi_g).
world::Action PidWarmupAction(const sensing::GoalVelocityState& goal,
                              double heading_gain = kWarmupHeadingGain);

}  // namespace spnav::sac

#endif  // SPNAV_SAC_PID_H_
