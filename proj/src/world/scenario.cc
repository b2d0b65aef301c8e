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

#include "spnav/world/scenario.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "spnav/error.h"

namespace spnav::world {
namespace {

Polygon PolygonFromJson(const nlohmann::json& j) {
  std::vector<Point> vertices;
  for (const auto& v : j) {
    if (!v.is_array() || v.size() != 2) {
      throw Error(ErrorCode::kFormat, "polygon vertex must be [x, y]");
    }
    vertices.emplace_back(v[0].get<double>(), v[1].get<double>());
  }
  return Polygon(std::move(vertices));
}

nlohmann::json PolygonToJson(const Polygon& polygon) {
  nlohmann::json out = nlohmann::json::array();
  for (const Point& v : polygon.vertices()) out.push_back({v.x(), v.y()});
  return out;
}

void ValidatePolygon(const Polygon& polygon, const std::string& what) {
  if (polygon.vertices().size() < 3) {
    throw Error(ErrorCode::kInvalidArgument, what + " needs at least 3 vertices");
  }
  if (std::abs(polygon.SignedArea()) <= 0.0) {
    throw Error(ErrorCode::kInvalidArgument, what + " has zero area");
  }
}

}  // namespace

Scenario::Scenario(std::string name, Bounds bounds, std::vector<Polygon> obstacles,
                   std::vector<EvalTask> eval_tasks, std::optional<Polygon> spawn_region)
    : name_(std::move(name)),
      bounds_(bounds),
      obstacles_(std::move(obstacles)),
      eval_tasks_(std::move(eval_tasks)),
      spawn_region_(std::move(spawn_region)) {
  if (!(bounds_.xmax > bounds_.xmin && bounds_.ymax > bounds_.ymin)) {
    throw Error(ErrorCode::kInvalidArgument, "scenario bounds must have positive extent");
  }
  for (size_t i = 0; i < obstacles_.size(); ++i) {
    ValidatePolygon(obstacles_[i], "obstacle " + std::to_string(i));
    for (const Segment& e : obstacles_[i].Edges()) edges_.push_back(e);
  }
  if (spawn_region_) ValidatePolygon(*spawn_region_, "spawn_region");
  const Point c00{bounds_.xmin, bounds_.ymin}, c10{bounds_.xmax, bounds_.ymin};
  const Point c11{bounds_.xmax, bounds_.ymax}, c01{bounds_.xmin, bounds_.ymax};
  edges_.push_back({c00, c10});
  edges_.push_back({c10, c11});
  edges_.push_back({c11, c01});
  edges_.push_back({c01, c00});
}

Scenario Scenario::FromJson(const nlohmann::json& j) {
  try {
    const auto& b = j.at("bounds");
    if (b.size() != 4) throw Error(ErrorCode::kFormat, "bounds must be [xmin, ymin, xmax, ymax]");
    Bounds bounds{b[0].get<double>(), b[1].get<double>(), b[2].get<double>(), b[3].get<double>()};
    std::vector<Polygon> obstacles;
    for (const auto& o : j.value("obstacles", nlohmann::json::array())) {
      obstacles.push_back(PolygonFromJson(o));
    }
    std::vector<EvalTask> tasks;
    for (const auto& t : j.value("eval_tasks", nlohmann::json::array())) {
      const auto& s = t.at("start");
      const auto& g = t.at("goal");
      tasks.push_back({{s.at(0).get<double>(), s.at(1).get<double>(), s.at(2).get<double>()},
                       {g.at(0).get<double>(), g.at(1).get<double>()}});
    }
    std::optional<Polygon> spawn;
    if (j.contains("spawn_region")) spawn = PolygonFromJson(j["spawn_region"]);
    Scenario scenario(j.value("name", std::string("unnamed")), bounds, std::move(obstacles),
                      std::move(tasks), std::move(spawn));
    return scenario;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string("scenario json: ") + e.what());
  }
}

Scenario Scenario::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open scenario file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kFormat, path.string() + ": " + e.what());
  }
  return FromJson(j);
}

nlohmann::json Scenario::ToJson() const {
  nlohmann::json j;
  j["name"] = name_;
  j["bounds"] = {bounds_.xmin, bounds_.ymin, bounds_.xmax, bounds_.ymax};
  j["obstacles"] = nlohmann::json::array();
  for (const Polygon& p : obstacles_) j["obstacles"].push_back(PolygonToJson(p));
  j["eval_tasks"] = nlohmann::json::array();
  for (const EvalTask& t : eval_tasks_) {
    j["eval_tasks"].push_back({{"start", {t.start.x, t.start.y, t.start.theta}},
                               {"goal", {t.goal.x(), t.goal.y()}}});
  }
  if (spawn_region_) j["spawn_region"] = PolygonToJson(*spawn_region_);
  return j;
}

double Scenario::Clearance(const Point& p) const {
  if (!bounds_.Contains(p)) return 0.0;
  for (const Polygon& o : obstacles_) {
    if (o.Contains(p)) return 0.0;
  }
  double best = std::numeric_limits<double>::infinity();
  for (const Segment& e : edges_) best = std::min(best, PointSegmentDistance(p, e));
  return best;
}

void Scenario::ValidateTasks(double robot_radius) const {
  for (size_t i = 0; i < eval_tasks_.size(); ++i) {
    const EvalTask& t = eval_tasks_[i];
    if (Clearance(t.start.position()) < robot_radius || Clearance(t.goal) < robot_radius) {
      throw Error(ErrorCode::kInvalidArgument,
                  name_ + ": eval task " + std::to_string(i) + " is not in free space");
    }
  }
}

bool CheckCollision(const Scenario& scenario, const Point& position, double radius) {
  return scenario.Clearance(position) < radius;
}

}  // namespace spnav::world
