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

#include "spnav/world/episode.h"

#include <cmath>
#include <numbers>

#include "spnav/error.h"

namespace spnav::world {

const char* StatusName(EpisodeStatus status) {
  switch (status) {
    case EpisodeStatus::kSuccess: return "success";
    case EpisodeStatus::kCrash: return "crash";
    case EpisodeStatus::kTimeout: return "timeout";
  }
  return "unknown";
}

StepResult EpisodeStep(const Scenario& scenario, const RobotState& robot, const Point& goal,
                       const Action& action, int step_index) {
  if (step_index < 0 || step_index >= kMaxEpisodeSteps) {
    throw Error(ErrorCode::kInvalidArgument, "step index out of range");
  }
  StepResult result{StepKinematics(robot, action, kControlPeriod), std::nullopt};
  const Point p = result.robot.pose.position();
  if (CheckCollision(scenario, p, result.robot.radius)) {
    result.terminal = EpisodeStatus::kCrash;
  } else if ((p - goal).norm() <= kGoalRadius) {
    result.terminal = EpisodeStatus::kSuccess;
  } else if (step_index == kMaxEpisodeSteps - 1) {
    result.terminal = EpisodeStatus::kTimeout;
  }
  return result;
}

namespace {

Point SampleFreePoint(const Scenario& scenario, Rng& rng, double clearance) {
  const Bounds& b = scenario.bounds();
  std::uniform_real_distribution<double> ux(b.xmin, b.xmax);
  std::uniform_real_distribution<double> uy(b.ymin, b.ymax);
  for (int attempt = 0; attempt < kMaxSamplingAttempts; ++attempt) {
    const Point p{ux(rng), uy(rng)};
    if (scenario.spawn_region() && !scenario.spawn_region()->Contains(p)) continue;
    if (!CheckCollision(scenario, p, clearance)) return p;
  }
  throw Error(ErrorCode::kSamplingExhausted,
              "no free point found in scenario '" + scenario.name() + "' after " +
                  std::to_string(kMaxSamplingAttempts) + " attempts");
}

}  // namespace

Task SampleTask(const Scenario& scenario, Rng& rng, double robot_radius) {
  const double clearance = robot_radius + kSpawnMargin;
  std::uniform_real_distribution<double> heading(-std::numbers::pi, std::numbers::pi);
  const Point start = SampleFreePoint(scenario, rng, clearance);
  for (int attempt = 0; attempt < kMaxSamplingAttempts; ++attempt) {
    const Point goal = SampleFreePoint(scenario, rng, clearance);
    if ((goal - start).norm() >= kMinStartGoalDistance) {
      Task task;
      task.start.pose = {start.x(), start.y(), NormalizeAngle(heading(rng))};
      task.start.radius = robot_radius;
      task.goal = goal;
      return task;
    }
  }
  throw Error(ErrorCode::kSamplingExhausted,
              "no goal at least 1 m from the start in scenario '" + scenario.name() + "'");
}

void Simulator::Reset(const Task& task) {
  robot_ = task.start;
  goal_ = task.goal;
  step_index_ = 0;
  done_ = false;
  status_ = EpisodeStatus::kTimeout;
  trajectory_.assign(1, robot_);
}

void Simulator::Resume(const RobotState& robot, const Point& goal, int step_index) {
  if (step_index < 0 || step_index >= kMaxEpisodeSteps) {
    throw Error(ErrorCode::kInvalidArgument, "step index out of range");
  }
  Reset({robot, goal});
  step_index_ = step_index;
}

std::optional<EpisodeStatus> Simulator::Step(const Action& action) {
  if (done_) throw Error(ErrorCode::kInvalidArgument, "episode already finished");
  StepResult r = EpisodeStep(*scenario_, robot_, goal_, action, step_index_);
  robot_ = r.robot;
  trajectory_.push_back(robot_);
  ++step_index_;
  if (r.terminal) {
    done_ = true;
    status_ = *r.terminal;
  }
  return r.terminal;
}

EpisodeOutcome Simulator::Outcome() const {
  return {status_, step_index_, trajectory_};
}

}  // namespace spnav::world
