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

#ifndef SPNAV_EVAL_SCORE_H_
#define SPNAV_EVAL_SCORE_H_

#include "spnav/world/episode.h"

namespace spnav::eval {

// 1 - 2 T_s / T_max on success, -1 for crash or timeout.
double Score(const world::EpisodeOutcome& outcome, int max_steps = world::kMaxEpisodeSteps);

}  // namespace spnav::eval

#endif  // SPNAV_EVAL_SCORE_H_
