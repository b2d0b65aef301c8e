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

#include "spnav/sac/pid.h"

#include <algorithm>
#include <cmath>

namespace spnav::sac {

world::Action PidWarmupAction(const sensing::GoalVelocityState& goal, double heading_gain) {
  return {world::kMaxLinearVelocity * std::max(0.0, std::cos(goal.bearing)),
          std::clamp(heading_gain * goal.bearing, -world::kMaxAngularVelocity,
                     world::kMaxAngularVelocity)};
}

}  // namespace spnav::sac
