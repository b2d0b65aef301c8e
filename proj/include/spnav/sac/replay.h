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

#ifndef SPNAV_SAC_REPLAY_H_
#define SPNAV_SAC_REPLAY_H_

#include <memory>
#include <mutex>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "spnav/sensing/observation.h"
#include "spnav/world/robot.h"

namespace spnav::sac {

using Rng = std::mt19937_64;
using ObservationPtr = std::shared_ptr<const sensing::Observation>;

// Consecutive transitions of an episode share their observation objects, so
// each stored state costs memory once.
struct Transition {
  ObservationPtr state;
  Eigen::Vector2d raw_action = Eigen::Vector2d::Zero();  // pre-tanh sample
  world::Action action;                                 // scaled command
  double reward = 0.0;
  ObservationPtr next_state;
  bool terminal = false;  // success or crash; timeouts bootstrap
};

// Fixed-capacity ring buffer with uniform sampling (with replacement).
// Push and Sample may be called from different threads.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(size_t capacity);

  void Push(Transition t);
  std::vector<Transition> Sample(size_t batch, Rng& rng) const;

  size_t size() const;
  size_t capacity() const { return capacity_; }
  // Index 0 is the oldest retained transition.
  Transition At(size_t i) const;

 private:
  size_t capacity_;
  size_t next_ = 0;
  std::vector<Transition> items_;
  mutable std::mutex mu_;
};

}  // namespace spnav::sac

#endif  // SPNAV_SAC_REPLAY_H_
