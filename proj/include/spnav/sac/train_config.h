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

#ifndef SPNAV_SAC_TRAIN_CONFIG_H_
#define SPNAV_SAC_TRAIN_CONFIG_H_

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "spnav/models/model_config.h"
#include "spnav/sac/reward.h"
#include "spnav/sac/sac_update.h"

namespace spnav::sac {

struct TrainConfig {
  SacHyper sac;
  int batch_size = 256;
  long replay_capacity = 500000;
  long total_steps = 500000;       // environment steps
  long min_fill = 1000;            // transitions before the first update
  int updates_per_step = 1;
  int warmup_episodes = 100;       // controlled by the heading controller
  double warmup_heading_gain = 1.5;
  long eval_interval = 5000;       // training-scenario evaluation
  long heldout_interval = 25000;   // held-out scenario evaluation, 0 = off
  int heldout_tasks = 100;
  std::uint64_t heldout_seed = 2024;
  int curriculum_window = 50;
  double curriculum_threshold = 0.9;
  RewardConfig reward;
  models::ModelConfig model;
  std::string lidar = "360|0.33|5|0";
  std::vector<std::filesystem::path> train_scenarios;    // ordered easy -> hard
  std::vector<std::filesystem::path> heldout_scenarios;

  void Validate() const;
  nlohmann::json ToJson() const;
  // Relative scenario paths resolve against `base_dir`.
  static TrainConfig FromJson(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
  static TrainConfig Load(const std::filesystem::path& path);
};

}  // namespace spnav::sac

#endif  // SPNAV_SAC_TRAIN_CONFIG_H_
