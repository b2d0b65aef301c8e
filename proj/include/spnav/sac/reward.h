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

#ifndef SPNAV_SAC_REWARD_H_
#define SPNAV_SAC_REWARD_H_

#include <optional>

#include "json.hpp"
#include "spnav/world/episode.h"

namespace spnav::sac {

struct RewardConfig {
  double success = 10.0;     // r_s
  double crash = -10.0;      // r_c
  double progress = 5.0;     // c1, per metre of goal-distance reduction
  double step_cost = -0.05;  // c2, charged every non-terminal step

  nlohmann::json ToJson() const;
  static RewardConfig FromJson(const nlohmann::json& j);
};

// r_s on success, r_c on crash, else c1 (d_prev - d_next) + c2. Timeout
// steps get the shaped reward.
double ComputeReward(double goal_distance_before, double goal_distance_after,
                     std::optional<world::EpisodeStatus> status, const RewardConfig& cfg = {});

}  // namespace spnav::sac

#endif  // SPNAV_SAC_REWARD_H_
