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

#include "spnav/sac/trainer.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include <spdlog/spdlog.h>

#include "spnav/error.h"
#include "spnav/eval/evaluator.h"
#include "spnav/eval/lidar_label.h"
#include "spnav/eval/score.h"
#include "spnav/models/policy.h"
#include "spnav/nn/weights_io.h"
#include "spnav/sac/pid.h"
#include "spnav/sac/reward.h"

namespace spnav::sac {
namespace {

constexpr double kAtanhLimit = 1.0 - 1e-6;

Rng Stream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return Rng(seq);
}

std::string RngState(const Rng& rng) {
  std::ostringstream os;
  os << rng;
  return os.str();
}

void SetRngState(Rng& rng, const std::string& s) {
  std::istringstream is(s);
  is >> rng;
  if (!is) throw Error(ErrorCode::kFormat, "corrupt RNG state in checkpoint");
}

nlohmann::json Summarize(const eval::EvalResult& r, long step, int env, const char* phase) {
  const auto& rep = r.report;
  const double n = rep.n_tasks > 0 ? rep.n_tasks : 1;
  return {{"step", step},
          {"env", env},
          {"phase", phase},
          {"scenario", rep.scenario},
          {"score_mean", rep.mean_score},
          {"success_rate", rep.success / n},
          {"crash_rate", rep.crash / n},
          {"timeout_rate", rep.timeout / n}};
}

void WriteAdam(const std::filesystem::path& path, const nn::AdamState& s) {
  std::vector<std::string> names;
  std::vector<nn::Matrix> tensors;
  for (size_t i = 0; i < s.m.size(); ++i) {
    names.push_back("m" + std::to_string(i));
    tensors.push_back(s.m[i]);
  }
  for (size_t i = 0; i < s.v.size(); ++i) {
    names.push_back("v" + std::to_string(i));
    tensors.push_back(s.v[i]);
  }
  nn::WriteTensors(path, "adam", {{"step", s.step}, {"count", s.m.size()}}, names, tensors);
}

void ReadAdam(const std::filesystem::path& path, nn::AdamState& s) {
  const nn::WeightFile f = nn::ReadWeights(path);
  const size_t n = f.config.at("count").get<size_t>();
  if (f.model_kind != "adam" || n != s.m.size() || f.tensors.size() != 2 * n) {
    throw Error(ErrorCode::kModelMismatch, "optimizer state does not match model: " + path.string());
  }
  for (size_t i = 0; i < n; ++i) {
    if (f.tensors[i].rows() != s.m[i].rows() || f.tensors[i].cols() != s.m[i].cols()) {
      throw Error(ErrorCode::kModelMismatch, "optimizer moment shape mismatch: " + path.string());
    }
    s.m[i] = f.tensors[i];
    s.v[i] = f.tensors[n + i];
  }
  s.step = f.config.at("step").get<long>();
}

void AssignInto(const std::filesystem::path& path, const nn::ParamRefs& params) {
  nn::AssignWeights(nn::ReadWeights(path), params);
}

}  // namespace

Trainer::Trainer(TrainConfig cfg, std::vector<world::Scenario> train,
                 std::vector<world::Scenario> heldout, std::uint64_t seed)
    : cfg_(std::move(cfg)),
      train_(std::move(train)),
      heldout_(std::move(heldout)),
      lidar_(eval::ParseLidarLabel(cfg_.lidar)),
      observer_(lidar_),
      replay_(static_cast<size_t>(cfg_.replay_capacity)),
      curriculum_(static_cast<int>(train_.size()), cfg_.curriculum_window, cfg_.curriculum_threshold),
      env_rng_(Stream(seed, 1)),
      policy_rng_(Stream(seed, 2)),
      update_rng_(Stream(seed, 3)) {
  if (train_.empty()) throw Error(ErrorCode::kInvalidArgument, "no training scenarios");
  cfg_.Validate();
  Rng init = Stream(seed, 0);
  agent_ = std::make_unique<SacAgent>(cfg_.model, cfg_.sac, init);
}

Trainer Trainer::FromConfig(const TrainConfig& cfg, std::uint64_t seed) {
  std::vector<world::Scenario> train, heldout;
  for (const auto& p : cfg.train_scenarios) train.push_back(world::Scenario::Load(p));
  for (const auto& p : cfg.heldout_scenarios) heldout.push_back(world::Scenario::Load(p));
  return Trainer(cfg, std::move(train), std::move(heldout), seed);
}

void Trainer::BeginEpisode() {
  env_ = curriculum_.Select(env_rng_);
  const world::Scenario& sc = train_[env_];
  const world::Task task = world::SampleTask(sc, env_rng_);
  sim_ = std::make_unique<world::Simulator>(sc);
  sim_->Reset(task);
  auto perception = observer_.Perceive(sc, sim_->robot(), sim_->goal());
  goal_state_ = perception.goal;
  obs_ = std::make_shared<const sensing::Observation>(perception.ToObservation());
}

void Trainer::EnvStep() {
  if (!sim_ || sim_->done()) BeginEpisode();

  Transition t;
  t.state = obs_;
  if (episodes_ < cfg_.warmup_episodes) {
    t.action = PidWarmupAction(goal_state_, cfg_.warmup_heading_gain);
    const Eigen::Vector2d squashed =
        models::UnscaleAction(t.action).cwiseMax(-kAtanhLimit).cwiseMin(kAtanhLimit);
    t.raw_action = squashed.array().atanh().matrix();
  } else {
    const models::ActorOutput out = agent_->actor.Evaluate(*obs_);
    const models::SampledAction a = models::SampleAction(out, policy_rng_);
    t.action = a.action;
    t.raw_action = a.raw;
  }

  const double d_before = (sim_->goal() - sim_->robot().pose.position()).norm();
  const std::optional<world::EpisodeStatus> status = sim_->Step(t.action);
  const double d_after = (sim_->goal() - sim_->robot().pose.position()).norm();
  t.reward = ComputeReward(d_before, d_after, status, cfg_.reward);
  t.terminal = status.has_value() && *status != world::EpisodeStatus::kTimeout;

  auto perception = observer_.Perceive(sim_->scenario(), sim_->robot(), sim_->goal());
  goal_state_ = perception.goal;
  obs_ = std::make_shared<const sensing::Observation>(perception.ToObservation());
  t.next_state = obs_;
  replay_.Push(std::move(t));
  ++step_;

  if (status) {
    curriculum_.Record(env_, *status == world::EpisodeStatus::kSuccess);
    ++episodes_;
  }

  if (static_cast<long>(replay_.size()) >= cfg_.min_fill) {
    for (int u = 0; u < cfg_.updates_per_step; ++u) {
      const auto batch = replay_.Sample(static_cast<size_t>(cfg_.batch_size), update_rng_);
      last_losses_ = SacUpdate(*agent_, batch, cfg_.sac, update_rng_);
      ++updates_;
    }
  }
}

std::vector<nlohmann::json> Trainer::Evaluate(bool heldout) const {
  std::vector<nlohmann::json> out;
  const eval::ActorPolicy policy(agent_->actor);
  const auto& scenarios = heldout ? heldout_ : train_;
  for (size_t i = 0; i < scenarios.size(); ++i) {
    eval::EvalOptions opts;
    if (heldout || scenarios[i].eval_tasks().empty()) {
      opts.n_tasks = heldout ? cfg_.heldout_tasks : 4;
      opts.seed = cfg_.heldout_seed + i;
    } else {
      opts.scenario_tasks = true;
    }
    const eval::EvalResult r = eval::RunEval(policy, scenarios[i], lidar_, opts);
    out.push_back(Summarize(r, step_, static_cast<int>(i), heldout ? "heldout" : "train"));
  }
  return out;
}

void Trainer::Run(const MetricsSink& sink, std::optional<long> max_steps) {
  const long stop = max_steps ? std::min(cfg_.total_steps, step_ + *max_steps) : cfg_.total_steps;
  while (step_ < stop) {
    EnvStep();
    if (cfg_.eval_interval > 0 && step_ % cfg_.eval_interval == 0) {
      for (const auto& m : Evaluate(false)) {
        if (sink) sink(m);
      }
      spdlog::info("step {} episodes {} stage {} q1 {:.4f} v {:.4f} pi {:.4f}", step_, episodes_,
                   curriculum_.stage(), last_losses_.q1_loss, last_losses_.v_loss,
                   last_losses_.policy_loss);
    }
    if (cfg_.heldout_interval > 0 && !heldout_.empty() && step_ % cfg_.heldout_interval == 0) {
      for (const auto& m : Evaluate(true)) {
        if (sink) sink(m);
      }
    }
  }
}

void Trainer::SaveCheckpoint(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  SacAgent& a = *agent_;
  a.actor.Save(dir / "actor.spnw");
  a.critics.Save(dir / "critics.spnw");
  a.target.Save(dir / "target.spnw");
  WriteAdam(dir / "actor_adam.spnw", a.actor_state);
  WriteAdam(dir / "critic_adam.spnw", a.critic_state);
  nlohmann::json state = {{"step", step_},
                          {"episodes", episodes_},
                          {"updates", updates_},
                          {"curriculum", curriculum_.ToJson()},
                          {"env_rng", RngState(env_rng_)},
                          {"policy_rng", RngState(policy_rng_)},
                          {"update_rng", RngState(update_rng_)},
                          {"config", cfg_.ToJson()}};
  if (sim_ && !sim_->done()) {
    const world::RobotState& r = sim_->robot();
    state["episode"] = {{"env", env_},
                        {"step_index", sim_->step_index()},
                        {"pose", {r.pose.x, r.pose.y, r.pose.theta}},
                        {"velocity", {r.v, r.omega}},
                        {"radius", r.radius},
                        {"goal", {sim_->goal().x(), sim_->goal().y()}}};
  }
  std::ofstream out(dir / "state.json");
  if (!out) throw Error(ErrorCode::kIo, "cannot write checkpoint in " + dir.string());
  out << state.dump(2) << '\n';
}

void Trainer::LoadCheckpoint(const std::filesystem::path& dir) {
  std::ifstream in(dir / "state.json");
  if (!in) throw Error(ErrorCode::kIo, "no checkpoint in " + dir.string());
  nlohmann::json state;
  try {
    in >> state;
    SacAgent& a = *agent_;
    AssignInto(dir / "actor.spnw", a.actor.Params());
    AssignInto(dir / "critics.spnw", a.critics.Params());
    AssignInto(dir / "target.spnw", a.target.Params());
    ReadAdam(dir / "actor_adam.spnw", a.actor_state);
    ReadAdam(dir / "critic_adam.spnw", a.critic_state);
    step_ = state.at("step").get<long>();
    episodes_ = state.at("episodes").get<long>();
    updates_ = state.at("updates").get<long>();
    curriculum_ = Curriculum::FromJson(state.at("curriculum"));
    SetRngState(env_rng_, state.at("env_rng").get<std::string>());
    SetRngState(policy_rng_, state.at("policy_rng").get<std::string>());
    SetRngState(update_rng_, state.at("update_rng").get<std::string>());
    sim_.reset();
    if (state.contains("episode")) {
      const nlohmann::json& e = state.at("episode");
      env_ = e.at("env").get<int>();
      if (env_ < 0 || env_ >= static_cast<int>(train_.size())) {
        throw Error(ErrorCode::kFormat, "checkpoint episode refers to an unknown scenario");
      }
      world::RobotState r;
      r.pose = {e.at("pose")[0].get<double>(), e.at("pose")[1].get<double>(),
                e.at("pose")[2].get<double>()};
      r.v = e.at("velocity")[0].get<double>();
      r.omega = e.at("velocity")[1].get<double>();
      r.radius = e.at("radius").get<double>();
      const world::Point goal(e.at("goal")[0].get<double>(), e.at("goal")[1].get<double>());
      sim_ = std::make_unique<world::Simulator>(train_[env_]);
      sim_->Resume(r, goal, e.at("step_index").get<int>());
      auto perception = observer_.Perceive(train_[env_], sim_->robot(), sim_->goal());
      goal_state_ = perception.goal;
      obs_ = std::make_shared<const sensing::Observation>(perception.ToObservation());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string("checkpoint: ") + e.what());
  }
}

}  // namespace spnav::sac
