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

// Command-line entry point: train, eval, sweep, viz, oracle-check.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "oracles.h"
#include "spnav/error.h"
#include "spnav/eval/evaluator.h"
#include "spnav/eval/lidar_label.h"
#include "spnav/eval/trace_export.h"
#include "spnav/sac/trainer.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Failures print exactly one JSON line on stderr.
int Fail(std::string_view code, const std::string& message, int exit_code = 1) {
  std::cerr << json{{"status", "error"}, {"code", code}, {"message", message}}.dump() << '\n';
  return exit_code;
}

void WriteJson(const fs::path& path, const json& j) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw spnav::Error(spnav::ErrorCode::kIo, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

std::vector<double> ParseNumbers(const std::string& text, size_t expected, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw spnav::Error(spnav::ErrorCode::kInvalidArgument, flag + ": '" + text + "' is not a number list");
    }
  }
  if (out.size() != expected) {
    throw spnav::Error(spnav::ErrorCode::kInvalidArgument,
                       flag + ": expected " + std::to_string(expected) + " comma-separated values");
  }
  return out;
}

struct TrainArgs {
  std::string config;
  std::uint64_t seed = 0;
  std::string out;
  long total_steps = -1;
  long checkpoint_every = 25000;
  bool resume = false;
};

int RunTrain(const TrainArgs& a) {
  spnav::sac::TrainConfig cfg = spnav::sac::TrainConfig::Load(a.config);
  if (a.total_steps >= 0) cfg.total_steps = a.total_steps;
  const fs::path out(a.out);
  fs::create_directories(out);
  WriteJson(out / "train_config.json", cfg.ToJson());

  auto trainer = spnav::sac::Trainer::FromConfig(cfg, a.seed);
  const fs::path ckpt = out / "checkpoint";
  if (a.resume && fs::exists(ckpt / "state.json")) {
    trainer.LoadCheckpoint(ckpt);
    spdlog::info("resumed at step {}", trainer.step());
  }
  std::ofstream metrics(out / "metrics.jsonl", a.resume ? std::ios::app : std::ios::trunc);
  if (!metrics) throw spnav::Error(spnav::ErrorCode::kIo, "cannot write " + (out / "metrics.jsonl").string());
  auto sink = [&](const json& m) { metrics << m.dump() << '\n' << std::flush; };
  while (trainer.step() < cfg.total_steps) {
    const long chunk = a.checkpoint_every > 0 ? a.checkpoint_every : cfg.total_steps;
    trainer.Run(sink, chunk - trainer.step() % chunk);
    trainer.SaveCheckpoint(ckpt);
  }
  spnav::models::Actor actor = trainer.agent().actor;
  spnav::models::Critics critics = trainer.agent().critics;
  actor.Save(out / "actor.spnw");
  critics.Save(out / "critics.spnw");
  std::cout << json{{"status", "ok"}, {"steps", trainer.step()}, {"episodes", trainer.episodes()},
                    {"actor", (out / "actor.spnw").string()}}
                   .dump()
            << '\n';
  return 0;
}

struct EvalArgs {
  std::string model, scenario, lidar = "360|0.33|5|0", report, trace_out;
  int tasks = 100;
  std::uint64_t seed = 0;
  int trace_every = 20;
};

int RunEvalCmd(const EvalArgs& a) {
  const spnav::eval::ActorPolicy policy(spnav::models::Actor::Load(a.model));
  const spnav::world::Scenario scenario = spnav::world::Scenario::Load(a.scenario);
  spnav::eval::EvalOptions opts;
  opts.n_tasks = a.tasks;
  opts.seed = a.seed;
  opts.trace_every = a.trace_out.empty() ? 0 : a.trace_every;
  const auto result = spnav::eval::RunEval(policy, scenario, spnav::eval::ParseLidarLabel(a.lidar), opts);
  const json report = result.report.ToJson();
  if (!a.report.empty()) WriteJson(a.report, report);
  if (!a.trace_out.empty()) spnav::eval::ExportTraces(scenario, result.traces, a.trace_out);
  std::cout << report.dump() << '\n';
  return 0;
}

struct SweepArgs {
  std::string model, lidars, scenarios, report;
  int tasks = 100;
  std::uint64_t seed = 0;
};

int RunSweep(const SweepArgs& a) {
  const spnav::eval::ActorPolicy policy(spnav::models::Actor::Load(a.model));
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(a.scenarios)) {
    if (e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw spnav::Error(spnav::ErrorCode::kIo, "--scenarios: no .json files in " + a.scenarios);
  json rows = json::array();
  for (const std::string& label : spnav::eval::SplitLabels(a.lidars)) {
    const auto lidar = spnav::eval::ParseLidarLabel(label);
    for (const auto& file : files) {
      const auto scenario = spnav::world::Scenario::Load(file);
      spnav::eval::EvalOptions opts;
      opts.n_tasks = a.tasks;
      opts.seed = a.seed;
      auto row = spnav::eval::RunEval(policy, scenario, lidar, opts).report.ToJson();
      row["lidar"] = label;
      std::cerr << row.dump() << '\n';
      rows.push_back(std::move(row));
    }
  }
  const json report{{"model", a.model}, {"tasks", a.tasks}, {"seed", a.seed}, {"rows", rows}};
  if (!a.report.empty()) WriteJson(a.report, report);
  std::cout << report.dump() << '\n';
  return 0;
}

struct VizArgs {
  std::string model, scenario, goal, start, lidar = "360|0.33|5|0", trace_out;
  std::uint64_t seed = 0;
  int trace_every = 20;
};

int RunViz(const VizArgs& a) {
  spnav::eval::ActorPolicy policy(spnav::models::Actor::Load(a.model));
  const spnav::world::Scenario scenario = spnav::world::Scenario::Load(a.scenario);
  const auto g = ParseNumbers(a.goal, 2, "--goal");
  spnav::world::Task task;
  if (a.start.empty()) {
    spnav::world::Rng rng(a.seed);
    task = spnav::world::SampleTask(scenario, rng);
  } else {
    const auto s = ParseNumbers(a.start, 3, "--start");
    task.start.pose = {s[0], s[1], s[2]};
  }
  task.goal = {g[0], g[1]};
  const spnav::sensing::Observer observer(spnav::eval::ParseLidarLabel(a.lidar));
  spnav::world::EpisodeOutcome outcome;
  auto trace = spnav::eval::RunEpisode(policy, scenario, observer, task, a.trace_every, &outcome);
  spnav::eval::ExportTraces(scenario, {trace}, a.trace_out);
  std::cout << json{{"status", spnav::world::StatusName(outcome.status)},
                    {"steps", outcome.steps},
                    {"trace_dir", a.trace_out}}
                   .dump()
            << '\n';
  return 0;
}

int RunOracleCheck(std::uint64_t seed) {
  bool ok = true;
  for (const auto& r : spnav::oracles::RunAllSuites(seed)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " metric=" << r.metric
              << " tol=" << r.tolerance << (r.detail.empty() ? "" : " (" + r.detail + ")") << '\n';
    ok = ok && r.passed;
  }
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sensor-agnostic mapless navigation: training, evaluation and diagnostics"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string log_level = "info";
  app.add_option("--log-level", log_level, "trace|debug|info|warn|error|off");

  TrainArgs train;
  auto* t = app.add_subcommand("train", "Train an agent with SAC");
  t->add_option("--config", train.config, "training config JSON")->required()->check(CLI::ExistingFile);
  t->add_option("--seed", train.seed, "random seed")->required();
  t->add_option("--out", train.out, "output directory")->required();
  t->add_option("--total-steps", train.total_steps, "override the config's total_steps");
  t->add_option("--checkpoint-every", train.checkpoint_every, "environment steps between checkpoints");
  t->add_flag("--resume", train.resume, "continue from OUT/checkpoint when present");

  EvalArgs ev;
  auto* e = app.add_subcommand("eval", "Evaluate a trained actor on sampled tasks");
  e->add_option("--model", ev.model, "actor weight file")->required()->check(CLI::ExistingFile);
  e->add_option("--scenario", ev.scenario, "scenario JSON")->required()->check(CLI::ExistingFile);
  e->add_option("--lidar", ev.lidar, "setup label fov|res|range|y_offset");
  e->add_option("--tasks", ev.tasks, "number of tasks")->check(CLI::PositiveNumber);
  e->add_option("--seed", ev.seed, "task seed");
  e->add_option("--report", ev.report, "write the JSON report here");
  e->add_option("--trace-out", ev.trace_out, "export CSV/SVG traces into this directory");
  e->add_option("--trace-every", ev.trace_every, "control steps between support-point records")
      ->check(CLI::PositiveNumber);

  SweepArgs sw;
  auto* s = app.add_subcommand("sweep", "Evaluate an actor across sensor setups and scenarios");
  s->add_option("--model", sw.model, "actor weight file")->required()->check(CLI::ExistingFile);
  s->add_option("--lidars", sw.lidars, "comma-separated setup labels")->required();
  s->add_option("--scenarios", sw.scenarios, "directory of scenario JSON files")
      ->required()
      ->check(CLI::ExistingDirectory);
  s->add_option("--tasks", sw.tasks, "tasks per scenario")->check(CLI::PositiveNumber);
  s->add_option("--seed", sw.seed, "task seed");
  s->add_option("--report", sw.report, "write the JSON report here");

  VizArgs vz;
  auto* v = app.add_subcommand("viz", "Run one episode and export its support-point trace");
  v->add_option("--model", vz.model, "actor weight file")->required()->check(CLI::ExistingFile);
  v->add_option("--scenario", vz.scenario, "scenario JSON")->required()->check(CLI::ExistingFile);
  v->add_option("--goal", vz.goal, "goal X,Y")->required();
  v->add_option("--trace-out", vz.trace_out, "output directory")->required();
  v->add_option("--start", vz.start, "start pose X,Y,THETA (sampled from --seed when absent)");
  v->add_option("--lidar", vz.lidar, "setup label");
  v->add_option("--seed", vz.seed, "seed for the sampled start");
  v->add_option("--trace-every", vz.trace_every, "control steps between records")->check(CLI::PositiveNumber);

  std::uint64_t oracle_seed = 7;
  auto* o = app.add_subcommand("oracle-check", "Run the reference-implementation suites");
  o->add_option("--seed", oracle_seed, "suite seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& h) {
    return app.exit(h);
  } catch (const CLI::ParseError& err) {
    // stderr stays a single JSON line; `--help` prints usage.
    return Fail("usage", err.what(), 64);
  }
  spdlog::set_default_logger(spdlog::stderr_color_mt("spnav"));
  spdlog::set_level(spdlog::level::from_str(log_level));

  try {
    if (*t) return RunTrain(train);
    if (*e) return RunEvalCmd(ev);
    if (*s) return RunSweep(sw);
    if (*v) return RunViz(vz);
    if (*o) return RunOracleCheck(oracle_seed);
  } catch (const spnav::Error& err) {
    return Fail(spnav::ErrorCodeName(err.code()), err.what());
  } catch (const std::exception& err) {
    return Fail("internal", err.what());
  }
  return 0;
}
