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

#ifndef SPNAV_MODELS_ACTOR_H_
#define SPNAV_MODELS_ACTOR_H_

#include <filesystem>

#include "spnav/models/layers.h"
#include "spnav/models/model_config.h"
#include "spnav/models/policy.h"
#include "spnav/models/state_batch.h"

namespace spnav::models {

struct PolicyStats {
  Var mean;     // 2 x B
  Var log_std;  // 2 x B, clamped to [kLogStdMin, kLogStdMax]
  Var pooled;   // K x B global features; invalid for FC-Net
  Var gate;     // H x B; valid for the SPN actor only
};

// Squashed-Gaussian policy network. The kind picks the trunk:
//   SPN      gated point features on encoded points, max-pooled, + g -> head
//   PointNet ungated point features on raw coordinates, max-pooled, + g -> head
//   FC-Net   [downsampled scan, g] -> dense stack (critic-shaped)
// Copyable; a copy is an independent parameter snapshot.
class Actor {
 public:
  Actor(const ModelConfig& cfg, nn::Rng& rng);

  PolicyStats Forward(Graph& g, const StateBatch& batch);
  // Single-state inference without gradient recording.
  ActorOutput Evaluate(const sensing::Observation& obs);

  ParamRefs Params();
  const ModelConfig& config() const { return cfg_; }
  PointExtractor& extractor() { return extractor_; }

  void Save(const std::filesystem::path& path);
  static Actor Load(const std::filesystem::path& path);

 private:
  ModelConfig cfg_;
  PointExtractor extractor_;  // SPN, PointNet
  Mlp trunk_;                 // FC-Net hidden stack; SPN/PointNet head
  DenseLayer mean_out_;
  DenseLayer log_std_out_;
};

// Index -> number of channels that selected it.
std::map<int, int> CountSupport(const std::vector<int>& indices);

}  // namespace spnav::models

#endif  // SPNAV_MODELS_ACTOR_H_
