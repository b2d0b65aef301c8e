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

#ifndef SPNAV_SAC_SAC_UPDATE_H_
#define SPNAV_SAC_SAC_UPDATE_H_

#include <vector>

#include "spnav/models/actor.h"
#include "spnav/models/critics.h"
#include "spnav/nn/adam.h"
#include "spnav/sac/replay.h"

namespace spnav::sac {

struct SacHyper {
  double gamma = 0.99;
  double alpha = 0.2;   // entropy weight
  double tau = 0.005;   // target smoothing
  nn::AdamHyper actor_opt;
  nn::AdamHyper critic_opt;
};

// Learner-owned networks: actor, value + twin Q critics, and a target copy of
// the critics of which only the value path is used.
struct SacAgent {
  models::Actor actor;
  models::Critics critics;
  models::Critics target;
  nn::AdamState actor_state;
  nn::AdamState critic_state;

  SacAgent(const models::ModelConfig& cfg, const SacHyper& hyper, nn::Rng& rng);
};

struct LossReport {
  double q1_loss = 0.0;
  double q2_loss = 0.0;
  double v_loss = 0.0;
  double policy_loss = 0.0;
  double mean_log_prob = 0.0;
};

// One SAC step with the value-network formulation:
//   Q loss: mean (Q_i(s, a) - (r + gamma (1 - done) V_target(s')))^2
//   V loss: mean (V(s) - (min_i Q_i(s, a~) - alpha log pi(a~|s)))^2
//   policy: mean (alpha log pi(a~|s) - min_i Q_i(s, a~)), a~ reparameterised
// All losses are evaluated at the pre-update parameters, then both optimizers
// step and V_target moves toward V by Polyak averaging.
LossReport SacUpdate(SacAgent& agent, const std::vector<Transition>& batch, const SacHyper& hyper,
                     nn::Rng& rng);
// Same, with the 2 x B reparameterisation noise supplied by the caller.
LossReport SacUpdateWithNoise(SacAgent& agent, const std::vector<Transition>& batch,
                              const SacHyper& hyper, const nn::Matrix& noise);

}  // namespace spnav::sac

#endif  // SPNAV_SAC_SAC_UPDATE_H_
