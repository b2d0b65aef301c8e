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

#ifndef SPNAV_WORLD_SCENARIO_H_
#define SPNAV_WORLD_SCENARIO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "spnav/world/geometry.h"

namespace spnav::world {

struct Bounds {
  double xmin = 0.0;
  double ymin = 0.0;
  double xmax = 0.0;
  double ymax = 0.0;

  bool Contains(const Point& p) const {
    return p.x() >= xmin && p.x() <= xmax && p.y() >= ymin && p.y() <= ymax;
  }
};

// A fixed (start pose, goal point) evaluation task stored with the scenario.
struct EvalTask {
  Pose2 start;
  Point goal;
};

// Polygonal world. The bounding rectangle counts as an obstacle.
//
// JSON layout:
//   {"name": ..., "bounds": [xmin, ymin, xmax, ymax],
//    "obstacles": [[[x, y], ...], ...],
//    "eval_tasks": [{"start": [x, y, theta], "goal": [x, y]}, ...],
//    "spawn_region": [[x, y], ...]}            // optional
class Scenario {
 public:
  Scenario(std::string name, Bounds bounds, std::vector<Polygon> obstacles,
           std::vector<EvalTask> eval_tasks = {},
           std::optional<Polygon> spawn_region = std::nullopt);

  static Scenario FromJson(const nlohmann::json& j);
  static Scenario Load(const std::filesystem::path& path);
  nlohmann::json ToJson() const;

  const std::string& name() const { return name_; }
  const Bounds& bounds() const { return bounds_; }
  const std::vector<Polygon>& obstacles() const { return obstacles_; }
  const std::vector<EvalTask>& eval_tasks() const { return eval_tasks_; }
  const std::optional<Polygon>& spawn_region() const { return spawn_region_; }

  // Every obstacle edge plus the four walls of the bounds.
  const std::vector<Segment>& edges() const { return edges_; }

  // Distance to the nearest obstacle edge or wall; zero when `p` lies inside an
  // obstacle or outside the bounds.
  double Clearance(const Point& p) const;

  // Throws spnav::Error when `robot_radius` clearance is violated by an
  // eval task.
  void ValidateTasks(double robot_radius) const;

 private:
  std::string name_;
  Bounds bounds_;
  std::vector<Polygon> obstacles_;
  std::vector<EvalTask> eval_tasks_;
  std::optional<Polygon> spawn_region_;
  std::vector<Segment> edges_;
};

// True iff the disc at `position` with `radius` overlaps any obstacle or wall.
bool CheckCollision(const Scenario& scenario, const Point& position, double radius);

}  // namespace spnav::world

#endif  // SPNAV_WORLD_SCENARIO_H_
