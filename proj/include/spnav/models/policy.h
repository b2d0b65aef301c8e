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

#ifndef SPNAV_MODELS_POLICY_H_
#define SPNAV_MODELS_POLICY_H_

#include <map>
#include <vector>

#include <Eigen/Core>

#include "spnav/nn/graph.h"
#include "spnav/world/robot.h"

namespace spnav::models {

inline constexpr double kLogStdMin = -20.0;
inline constexpr double kLogStdMax = 2.0;

// Per-state policy statistics plus the support points that produced them.
struct ActorOutput {
  Eigen::Vector2d mean = Eigen::Vector2d::Zero();
  Eigen::Vector2d log_std = Eigen::Vector2d::Zero();
  std::vector<int> support_indices;          // one per channel (K), empty for FC-Net
  std::map<int, int> support_multiplicity;   // point index -> channel count
};

// Affine map from the tanh box (-1, 1)^2 to [0, v_max] x [-w_max, w_max].
world::Action ScaleAction(const Eigen::Vector2d& squashed);
Eigen::Vector2d UnscaleAction(const world::Action& action);

struct SampledAction {
  world::Action action;
  Eigen::Vector2d raw;       // pre-tanh Gaussian sample u
  Eigen::Vector2d squashed;  // tanh(u)
  double log_prob = 0.0;     // density of `squashed` on (-1, 1)^2
};

// log N(u; mean, std) - sum log(1 - tanh(u)^2), the tanh term evaluated as
// 2 (log 2 - u - softplus(-2u)) so it stays finite when tanh saturates.
double SquashedLogProb(const Eigen::Vector2d& mean, const Eigen::Vector2d& log_std,
                       const Eigen::Vector2d& raw);

SampledAction SampleAction(const ActorOutput& out, nn::Rng& rng);
SampledAction SampleActionWithNoise(const ActorOutput& out, const Eigen::Vector2d& noise);
world::Action DeterministicAction(const ActorOutput& out);

// Reparameterised sample on a graph: u = mean + exp(log_std) .* noise.
struct GraphSample {
  nn::Var squashed;  // 2 x B
  nn::Var log_prob;  // 1 x B
};
GraphSample SampleOnGraph(nn::Graph& g, nn::Var mean, nn::Var log_std, const nn::Matrix& noise);

nn::Matrix StandardNormal(long rows, long cols, nn::Rng& rng);

}  // namespace spnav::models

#endif  // SPNAV_MODELS_POLICY_H_
