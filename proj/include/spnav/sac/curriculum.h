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

#ifndef SPNAV_SAC_CURRICULUM_H_
#define SPNAV_SAC_CURRICULUM_H_

#include <deque>
#include <random>
#include <vector>

#include "json.hpp"

namespace spnav::sac {

// Scenario selection probabilities ordered by difficulty. The current stage
// holds the high probability (0.7); once its success rate over the last
// `window` episodes reaches `threshold`, it swaps probabilities with the next
// scenario. When the last scenario holds the high probability the schedule
// freezes for the rest of training.
class Curriculum {
 public:
  static constexpr double kFocusProbability = 0.7;

  explicit Curriculum(int num_envs = 4, int window = 50, double threshold = 0.9);

  void Record(int env, bool success);
  int Select(std::mt19937_64& rng) const;

  const std::vector<double>& probabilities() const { return probabilities_; }
  int stage() const { return stage_; }
  bool frozen() const { return frozen_; }
  // Success rate over the retained window, 0 when empty.
  double SuccessRate(int env) const;

  nlohmann::json ToJson() const;
  static Curriculum FromJson(const nlohmann::json& j);

 private:
  int window_;
  double threshold_;
  int stage_ = 0;
  bool frozen_ = false;
  std::vector<double> probabilities_;
  std::vector<std::deque<bool>> history_;
};

}  // namespace spnav::sac

#endif  // SPNAV_SAC_CURRICULUM_H_
