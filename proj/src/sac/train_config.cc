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

#include "spnav/sac/train_config.h"

#include <fstream>

#include "spnav/error.h"

namespace spnav::sac {
namespace {

std::vector<std::filesystem::path> Paths(const nlohmann::json& j, const char* key,
                                         const std::filesystem::path& base) {
  std::vector<std::filesystem::path> out;
  for (const auto& p : j.value(key, nlohmann::json::array())) {
    std::filesystem::path path = p.get<std::string>();
    out.push_back(path.is_absolute() || base.empty() ? path : base / path);
  }
  return out;
}

}  // namespace

void TrainConfig::Validate() const {
  if (!(sac.gamma >= 0.0 && sac.gamma < 1.0)) throw Error(ErrorCode::kInvalidArgument, "gamma must be in [0, 1)");
  if (!(sac.alpha >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "alpha must be >= 0");
  if (!(sac.tau > 0.0 && sac.tau <= 1.0)) throw Error(ErrorCode::kInvalidArgument, "tau must be in (0, 1]");
  if (batch_size < 1 || replay_capacity < 1 || total_steps < 0 || updates_per_step < 0) {
    throw Error(ErrorCode::kInvalidArgument, "batch size, replay capacity and step counts must be positive");
  }
  if (eval_interval < 0 || heldout_interval < 0) throw Error(ErrorCode::kInvalidArgument, "intervals must be >= 0");
  if (train_scenarios.empty()) throw Error(ErrorCode::kInvalidArgument, "at least one training scenario is required");
  model.Validate();
}

nlohmann::json TrainConfig::ToJson() const {
  nlohmann::json j;
  j["gamma"] = sac.gamma;
  j["alpha"] = sac.alpha;
  j["tau"] = sac.tau;
  j["actor_lr"] = sac.actor_opt.lr;
  j["critic_lr"] = sac.critic_opt.lr;
  j["batch_size"] = batch_size;
  j["replay_capacity"] = replay_capacity;
  j["total_steps"] = total_steps;
  j["min_fill"] = min_fill;
  j["updates_per_step"] = updates_per_step;
  j["warmup_episodes"] = warmup_episodes;
  j["warmup_heading_gain"] = warmup_heading_gain;
  j["eval_interval"] = eval_interval;
  j["heldout_interval"] = heldout_interval;
  j["heldout_tasks"] = heldout_tasks;
  j["heldout_seed"] = heldout_seed;
  j["curriculum_window"] = curriculum_window;
  j["curriculum_threshold"] = curriculum_threshold;
  j["reward"] = reward.ToJson();
  j["model"] = model.ToJson();
  j["lidar"] = lidar;
  j["train_scenarios"] = nlohmann::json::array();
  for (const auto& p : train_scenarios) j["train_scenarios"].push_back(p.string());
  j["heldout_scenarios"] = nlohmann::json::array();
  for (const auto& p : heldout_scenarios) j["heldout_scenarios"].push_back(p.string());
  return j;
}

TrainConfig TrainConfig::FromJson(const nlohmann::json& j, const std::filesystem::path& base_dir) {
  TrainConfig c;
  try {
    c.sac.gamma = j.value("gamma", c.sac.gamma);
    c.sac.alpha = j.value("alpha", c.sac.alpha);
    c.sac.tau = j.value("tau", c.sac.tau);
    const double lr = j.value("lr", c.sac.actor_opt.lr);
    c.sac.actor_opt.lr = j.value("actor_lr", lr);
    c.sac.critic_opt.lr = j.value("critic_lr", lr);
    c.batch_size = j.value("batch_size", c.batch_size);
    c.replay_capacity = j.value("replay_capacity", c.replay_capacity);
    c.total_steps = j.value("total_steps", c.total_steps);
    c.min_fill = j.value("min_fill", c.min_fill);
    c.updates_per_step = j.value("updates_per_step", c.updates_per_step);
    c.warmup_episodes = j.value("warmup_episodes", c.warmup_episodes);
    c.warmup_heading_gain = j.value("warmup_heading_gain", c.warmup_heading_gain);
    c.eval_interval = j.value("eval_interval", c.eval_interval);
    c.heldout_interval = j.value("heldout_interval", c.heldout_interval);
    c.heldout_tasks = j.value("heldout_tasks", c.heldout_tasks);
    c.heldout_seed = j.value("heldout_seed", c.heldout_seed);
    c.curriculum_window = j.value("curriculum_window", c.curriculum_window);
    c.curriculum_threshold = j.value("curriculum_threshold", c.curriculum_threshold);
    if (j.contains("reward")) c.reward = RewardConfig::FromJson(j["reward"]);
    if (j.contains("model")) c.model = models::ModelConfig::FromJson(j["model"]);
    c.lidar = j.value("lidar", c.lidar);
    c.train_scenarios = Paths(j, "train_scenarios", base_dir);
    c.heldout_scenarios = Paths(j, "heldout_scenarios", base_dir);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string("train config: ") + e.what());
  }
  c.Validate();
  return c;
}

TrainConfig TrainConfig::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open train config " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kFormat, path.string() + ": " + e.what());
  }
  return FromJson(j, path.parent_path());
}

}  // namespace spnav::sac
