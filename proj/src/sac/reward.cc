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

#include "spnav/sac/reward.h"

#include "spnav/error.h"

namespace spnav::sac {

nlohmann::json RewardConfig::ToJson() const {
  return {{"success", success}, {"crash", crash}, {"progress", progress}, {"step_cost", step_cost}};
}

RewardConfig RewardConfig::FromJson(const nlohmann::json& j) {
  RewardConfig c;
  c.success = j.value("success", c.success);
  c.crash = j.value("crash", c.crash);
  c.progress = j.value("progress", c.progress);
  c.step_cost = j.value("step_cost", c.step_cost);
  return c;
}

double ComputeReward(double goal_distance_before, double goal_distance_after,
                     std::optional<world::EpisodeStatus> status, const RewardConfig& cfg) {
  if (goal_distance_before < 0.0 || goal_distance_after < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "goal distances must be non-negative");
  }
  if (status == world::EpisodeStatus::kSuccess) return cfg.success;
  if (status == world::EpisodeStatus::kCrash) return cfg.crash;
  return cfg.progress * (goal_distance_before - goal_distance_after) + cfg.step_cost;
}

}  // namespace spnav::sac
