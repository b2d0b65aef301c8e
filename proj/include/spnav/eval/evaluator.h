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

#ifndef SPNAV_EVAL_EVALUATOR_H_
#define SPNAV_EVAL_EVALUATOR_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "spnav/models/actor.h"
#include "spnav/sensing/observation.h"
#include "spnav/world/episode.h"

namespace spnav::eval {

struct Decision {
  world::Action action;
  std::vector<int> support_indices;  // per channel; empty for scan-based models
};

// A controller under evaluation. Instances are used by one thread at a time;
// the harness clones one per worker.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual std::unique_ptr<Policy> Clone() const = 0;
  virtual Decision Act(const sensing::Perception& perception) = 0;
};

// Deterministic action of a trained actor (tanh of the mean, scaled).
class ActorPolicy : public Policy {
 public:
  explicit ActorPolicy(models::Actor actor) : actor_(std::move(actor)) {}
  std::unique_ptr<Policy> Clone() const override { return std::make_unique<ActorPolicy>(*this); }
  Decision Act(const sensing::Perception& perception) override;
  const models::Actor& actor() const { return actor_; }

 private:
  models::Actor actor_;
};

struct SupportPoint {
  Eigen::Vector2d position;  // robot frame, (d sin a, d cos a)
  int multiplicity = 1;
};

struct TraceStep {
  int step = 0;
  world::RobotState robot;
  world::Point goal{0.0, 0.0};
  std::vector<SupportPoint> support;
};

struct EpisodeTrace {
  int task_index = 0;
  world::EpisodeStatus status = world::EpisodeStatus::kTimeout;
  std::vector<TraceStep> steps;              // every `trace_every` control steps
  std::vector<world::RobotState> trajectory; // every pose of the episode
};

struct ScenarioReport {
  std::string scenario;
  std::string lidar_label;
  int n_tasks = 0;
  int success = 0;
  int crash = 0;
  int timeout = 0;
  double mean_score = 0.0;
  double mean_steps = 0.0;

  double success_rate() const { return n_tasks ? static_cast<double>(success) / n_tasks : 0.0; }
  nlohmann::json ToJson() const;
};

struct EvalOptions {
  int n_tasks = 100;
  std::uint64_t seed = 0;
  // Use the scenario's stored eval tasks instead of sampling.
  bool scenario_tasks = false;
  int trace_every = 0;  // 0 disables support-point traces
};

struct EvalResult {
  ScenarioReport report;
  std::vector<world::EpisodeOutcome> outcomes;  // by task index
  std::vector<EpisodeTrace> traces;             // by task index, when enabled
};

// The task list depends only on (scenario, n_tasks, seed).
std::vector<world::Task> MakeTasks(const world::Scenario& scenario, int n_tasks, std::uint64_t seed);

EpisodeTrace RunEpisode(Policy& policy, const world::Scenario& scenario,
                        const sensing::Observer& observer, const world::Task& task, int trace_every,
                        world::EpisodeOutcome* outcome);

// Runs every task with its own simulator; episodes are parallel across
// OpenMP threads and aggregated in task order.
EvalResult RunEval(const Policy& policy, const world::Scenario& scenario,
                   const sensing::LidarConfig& lidar, const EvalOptions& options);
EvalResult RunEval(const Policy& policy, const world::Scenario& scenario,
                   const std::vector<world::Task>& tasks, const sensing::LidarConfig& lidar,
                   int trace_every = 0);

}  // namespace spnav::eval

#endif  // SPNAV_EVAL_EVALUATOR_H_
