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

#include "spnav/sac/curriculum.h"

#include <cmath>

#include <algorithm>
#include <numeric>

#include "spnav/error.h"

namespace spnav::sac {

Curriculum::Curriculum(int num_envs, int window, double threshold)
    : window_(window), threshold_(threshold), history_(num_envs) {
  if (num_envs < 1 || window < 1) throw Error(ErrorCode::kInvalidArgument, "bad curriculum size");
  if (num_envs == 1) {
    probabilities_ = {1.0};
    frozen_ = true;
    return;
  }
  // Rounded to 12 decimals so that four envs get exactly 0.1 rather than
  // 0.30000000000000004 / 3.
  const double rest = std::round((1.0 - kFocusProbability) / (num_envs - 1) * 1e12) / 1e12;
  probabilities_.assign(num_envs, rest);
  probabilities_[0] = kFocusProbability;
}

void Curriculum::Record(int env, bool success) {
  if (env < 0 || env >= static_cast<int>(history_.size())) {
    throw Error(ErrorCode::kInvalidArgument, "curriculum env index out of range");
  }
  auto& h = history_[env];
  h.push_back(success);
  if (static_cast<int>(h.size()) > window_) h.pop_front();
  if (frozen_ || env != stage_ || static_cast<int>(h.size()) < window_) return;
  const int successes = static_cast<int>(std::count(h.begin(), h.end(), true));
  if (successes < threshold_ * window_ - 1e-9) return;
  std::swap(probabilities_[stage_], probabilities_[stage_ + 1]);
  ++stage_;
  if (stage_ == static_cast<int>(probabilities_.size()) - 1) frozen_ = true;
}

int Curriculum::Select(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double x = u(rng);
  for (size_t i = 0; i + 1 < probabilities_.size(); ++i) {
    if (x < probabilities_[i]) return static_cast<int>(i);
    x -= probabilities_[i];
  }
  return static_cast<int>(probabilities_.size()) - 1;
}

double Curriculum::SuccessRate(int env) const {
  const auto& h = history_.at(env);
  if (h.empty()) return 0.0;
  return static_cast<double>(std::count(h.begin(), h.end(), true)) / static_cast<double>(h.size());
}

nlohmann::json Curriculum::ToJson() const {
  nlohmann::json j{{"window", window_}, {"threshold", threshold_}, {"stage", stage_},
                   {"frozen", frozen_}, {"probabilities", probabilities_}};
  j["history"] = nlohmann::json::array();
  for (const auto& h : history_) j["history"].push_back(std::vector<bool>(h.begin(), h.end()));
  return j;
}

Curriculum Curriculum::FromJson(const nlohmann::json& j) {
  const auto history = j.at("history").get<std::vector<std::vector<bool>>>();
  Curriculum c(static_cast<int>(history.size()), j.at("window").get<int>(), j.at("threshold").get<double>());
  c.stage_ = j.at("stage").get<int>();
  c.frozen_ = j.at("frozen").get<bool>();
  c.probabilities_ = j.at("probabilities").get<std::vector<double>>();
  for (size_t i = 0; i < history.size(); ++i) c.history_[i].assign(history[i].begin(), history[i].end());
  return c;
}

}  // namespace spnav::sac
