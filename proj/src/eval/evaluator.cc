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

#include "spnav/eval/evaluator.h"

#include <cmath>
#include <exception>

#include "spnav/error.h"
#include "spnav/eval/lidar_label.h"
#include "spnav/eval/score.h"
#include "spnav/models/policy.h"

namespace spnav::eval {

Decision ActorPolicy::Act(const sensing::Perception& perception) {
  if (actor_.config().actor != models::ActorKind::kFcNet && perception.points.size() == 0) {
    throw Error(ErrorCode::kModelMismatch, "point-set model received no points");
  }
  models::ActorOutput out = actor_.Evaluate(perception.ToObservation());
  return {models::DeterministicAction(out), std::move(out.support_indices)};
}

nlohmann::json ScenarioReport::ToJson() const {
  return {{"scenario", scenario},     {"lidar", lidar_label},   {"n_tasks", n_tasks},
          {"success", success},       {"crash", crash},         {"timeout", timeout},
          {"success_rate", success_rate()}, {"mean_score", mean_score}, {"mean_steps", mean_steps}};
}

std::vector<world::Task> MakeTasks(const world::Scenario& scenario, int n_tasks, std::uint64_t seed) {
  world::Rng rng(seed);
  std::vector<world::Task> tasks;
  tasks.reserve(n_tasks);
  for (int i = 0; i < n_tasks; ++i) tasks.push_back(world::SampleTask(scenario, rng));
  return tasks;
}

EpisodeTrace RunEpisode(Policy& policy, const world::Scenario& scenario,
                        const sensing::Observer& observer, const world::Task& task, int trace_every,
                        world::EpisodeOutcome* outcome) {
  world::Simulator sim(scenario);
  sim.Reset(task);
  EpisodeTrace trace;
  while (!sim.done()) {
    const sensing::Perception p = observer.Perceive(scenario, sim.robot(), sim.goal());
    const Decision d = policy.Act(p);
    if (trace_every > 0 && sim.step_index() % trace_every == 0) {
      TraceStep step{sim.step_index(), sim.robot(), sim.goal(), {}};
      for (const auto& [index, count] : models::CountSupport(d.support_indices)) {
        const double a = p.points.bearings[index], r = p.points.ranges[index];
        step.support.push_back({{r * std::sin(a), r * std::cos(a)}, count});
      }
      trace.steps.push_back(std::move(step));
    }
    sim.Step(d.action);
  }
  if (outcome) *outcome = sim.Outcome();
  trace.status = sim.Outcome().status;
  trace.trajectory = sim.trajectory();
  return trace;
}

EvalResult RunEval(const Policy& policy, const world::Scenario& scenario,
                   const std::vector<world::Task>& tasks, const sensing::LidarConfig& lidar,
                   int trace_every) {
  const sensing::Observer observer(lidar);
  const long n = static_cast<long>(tasks.size());
  EvalResult result;
  result.outcomes.resize(n);
  result.traces.resize(n);
  std::exception_ptr failure;
#pragma omp parallel
  {
    std::unique_ptr<Policy> local = policy.Clone();
#pragma omp for schedule(dynamic, 1)
    for (long t = 0; t < n; ++t) {
      try {
        result.traces[t] = RunEpisode(*local, scenario, observer, tasks[t], trace_every, &result.outcomes[t]);
        result.traces[t].task_index = static_cast<int>(t);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  if (trace_every <= 0) result.traces.clear();

  ScenarioReport& r = result.report;
  r.scenario = scenario.name();
  r.lidar_label = FormatLidarLabel(lidar);
  r.n_tasks = static_cast<int>(n);
  double score_sum = 0.0, step_sum = 0.0;
  for (const world::EpisodeOutcome& o : result.outcomes) {
    switch (o.status) {
      case world::EpisodeStatus::kSuccess: ++r.success; break;
      case world::EpisodeStatus::kCrash: ++r.crash; break;
      case world::EpisodeStatus::kTimeout: ++r.timeout; break;
    }
    score_sum += Score(o);
    step_sum += o.steps;
  }
  if (n > 0) {
    r.mean_score = score_sum / static_cast<double>(n);
    r.mean_steps = step_sum / static_cast<double>(n);
  }
  return result;
}

EvalResult RunEval(const Policy& policy, const world::Scenario& scenario,
                   const sensing::LidarConfig& lidar, const EvalOptions& options) {
  std::vector<world::Task> tasks;
  if (options.scenario_tasks) {
    for (const world::EvalTask& t : scenario.eval_tasks()) {
      world::Task task;
      task.start.pose = t.start;
      task.goal = t.goal;
      tasks.push_back(task);
    }
  } else {
    tasks = MakeTasks(scenario, options.n_tasks, options.seed);
  }
  return RunEval(policy, scenario, tasks, lidar, options.trace_every);
}

}  // namespace spnav::eval
