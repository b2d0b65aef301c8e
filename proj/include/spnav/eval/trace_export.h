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

#ifndef SPNAV_EVAL_TRACE_EXPORT_H_
#define SPNAV_EVAL_TRACE_EXPORT_H_

#include <filesystem>
#include <string>
#include <vector>

#include "spnav/eval/evaluator.h"
#include "spnav/world/scenario.h"

namespace spnav::eval {

// CSV, one row per recorded step:
//   step,x,y,theta,v,omega,goal_x,goal_y[,px,py,multiplicity]...
// Support points are robot-frame; doubles are written with round-trip
// precision.
std::string TraceToCsv(const EpisodeTrace& trace);
EpisodeTrace TraceFromCsv(const std::string& csv);

// Obstacles, the trajectory, a robot marker per recorded step, and support
// points (world frame) whose marker size scales with multiplicity.
std::string TraceToSvg(const world::Scenario& scenario, const std::vector<EpisodeTrace>& traces);

// Writes episode_<i>.csv per trace and one overlay.svg into `dir`.
void ExportTraces(const world::Scenario& scenario, const std::vector<EpisodeTrace>& traces,
                  const std::filesystem::path& dir);

}  // namespace spnav::eval

#endif  // SPNAV_EVAL_TRACE_EXPORT_H_
