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

#ifndef SPNAV_WORLD_EPISODE_H_
#define SPNAV_WORLD_EPISODE_H_

#include <optional>
#include <random>
#include <vector>

#include "spnav/world/robot.h"
#include "spnav/world/scenario.h"

namespace spnav::world {

using Rng = std::mt19937_64;

enum class EpisodeStatus { kSuccess, kCrash, kTimeout };

const char* StatusName(EpisodeStatus status);

struct EpisodeOutcome {
  EpisodeStatus status = EpisodeStatus::kTimeout;
  int steps = 0;  // control steps taken, <= kMaxEpisodeSteps
  std::vector<RobotState> trajectory;
};

struct StepResult {
  RobotState robot;
  std::optional<EpisodeStatus> terminal;
};

// Advances one control period. Crash takes precedence over Success when the
// post-step pose both collides and lies within the goal radius; Timeout is
// reported on step index kMaxEpisodeSteps - 1.
StepResult EpisodeStep(const Scenario& scenario, const RobotState& robot, const Point& goal,
                       const Action& action, int step_index);

struct Task {
  RobotState start;
  Point goal;
};

inline constexpr double kSpawnMargin = 0.05;    // m beyond the robot radius
inline constexpr double kMinStartGoalDistance = 1.0;  // m
inline constexpr int kMaxSamplingAttempts = 10000;

// Rejection-samples a start pose and goal point in free space. Throws
// spnav::Error(kSamplingExhausted) after kMaxSamplingAttempts rejections.
Task SampleTask(const Scenario& scenario, Rng& rng, double robot_radius = kRobotRadius);

// Stateful single-episode simulator. Not thread-safe; one instance per worker.
class Simulator {
 public:
  explicit Simulator(const Scenario& scenario) : scenario_(&scenario) {}

  void Reset(const Task& task);
  // Continues an unfinished episode at `step_index`; the trajectory restarts
  // at `robot`.
  void Resume(const RobotState& robot, const Point& goal, int step_index);
  // Returns the terminal status if the episode ended on this step.
  std::optional<EpisodeStatus> Step(const Action& action);

  const Scenario& scenario() const { return *scenario_; }
  const RobotState& robot() const { return robot_; }
  const Point& goal() const { return goal_; }
  int step_index() const { return step_index_; }
  bool done() const { return done_; }
  const std::vector<RobotState>& trajectory() const { return trajectory_; }
  // Valid once done().
  EpisodeOutcome Outcome() const;

 private:
  const Scenario* scenario_;
  RobotState robot_;
  Point goal_{0.0, 0.0};
  int step_index_ = 0;
  bool done_ = false;
  EpisodeStatus status_ = EpisodeStatus::kTimeout;
  std::vector<RobotState> trajectory_;
};

}  // namespace spnav::world

#endif  // SPNAV_WORLD_EPISODE_H_
