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

#include "spnav/eval/score.h"

namespace spnav::eval {

double Score(const world::EpisodeOutcome& outcome, int max_steps) {
  if (outcome.status != world::EpisodeStatus::kSuccess) return -1.0;
  return 1.0 - 2.0 * static_cast<double>(outcome.steps) / static_cast<double>(max_steps);
}

}  // namespace spnav::eval
