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

#ifndef SPNAV_SAC_TRAINER_H_
#define SPNAV_SAC_TRAINER_H_

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "json.hpp"
#include "spnav/sac/curriculum.h"
#include "spnav/sac/replay.h"
#include "spnav/sac/sac_update.h"
#include "spnav/sac/train_config.h"
#include "spnav/sensing/observation.h"
#include "spnav/world/episode.h"

namespace spnav::sac {

// One metrics line: {step, env, phase, score_mean, success_rate, crash_rate,
// timeout_rate}. `phase` is "train" or "heldout".
using MetricsSink = std::function<void(const nlohmann::json&)>;

// Single-process SAC training loop: one environment step, then
// `updates_per_step` gradient updates once the buffer holds `min_fill`
// transitions. The first `warmup_episodes` episodes are driven by the heading
// controller. Given the same seed and config, two runs are bitwise identical.
class Trainer {
 public:
  Trainer(TrainConfig cfg, std::vector<world::Scenario> train, std::vector<world::Scenario> heldout,
          std::uint64_t seed);
  static Trainer FromConfig(const TrainConfig& cfg, std::uint64_t seed);

  // Runs until `step() == cfg.total_steps` or `max_steps` more steps.
  void Run(const MetricsSink& sink, std::optional<long> max_steps = std::nullopt);

  // Evaluates the deterministic policy; phase "train" uses each training
  // scenario's stored tasks, "heldout" samples `heldout_tasks` per scenario.
  std::vector<nlohmann::json> Evaluate(bool heldout) const;

  // Networks, optimizer moments, counters, curriculum, RNG streams and the
  // unfinished episode. The replay buffer is not saved; a resumed run refills
  // it before updating.
  void SaveCheckpoint(const std::filesystem::path& dir) const;
  void LoadCheckpoint(const std::filesystem::path& dir);

  long step() const { return step_; }
  long episodes() const { return episodes_; }
  long updates() const { return updates_; }
  const SacAgent& agent() const { return *agent_; }
  const Curriculum& curriculum() const { return curriculum_; }
  const ReplayBuffer& replay() const { return replay_; }
  const TrainConfig& config() const { return cfg_; }
  const LossReport& last_losses() const { return last_losses_; }

 private:
  void BeginEpisode();
  void EnvStep();

  TrainConfig cfg_;
  std::vector<world::Scenario> train_;
  std::vector<world::Scenario> heldout_;
  sensing::LidarConfig lidar_;
  sensing::Observer observer_;
  std::unique_ptr<SacAgent> agent_;
  ReplayBuffer replay_;
  Curriculum curriculum_;
  Rng env_rng_;
  Rng policy_rng_;
  Rng update_rng_;

  long step_ = 0;
  long episodes_ = 0;
  long updates_ = 0;
  LossReport last_losses_;

  // Active episode.
  int env_ = -1;
  std::unique_ptr<world::Simulator> sim_;
  ObservationPtr obs_;
  sensing::GoalVelocityState goal_state_;
};

}  // namespace spnav::sac

#endif  // SPNAV_SAC_TRAINER_H_
