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

#ifndef SPNAV_MODELS_CRITICS_H_
#define SPNAV_MODELS_CRITICS_H_

#include <filesystem>

#include "spnav/models/layers.h"
#include "spnav/models/model_config.h"
#include "spnav/models/state_batch.h"

namespace spnav::models {

// Value network plus two Q networks.
//   SPN:    each is a dense stack over [downsampled scan, g (, action)].
//   SPN-v2: one gated point extractor shared by all three, each with its
//           own dense head over [pooled, g (, action)].
// The critics never share parameters with the actor.
class Critics {
 public:
  Critics(const ModelConfig& cfg, nn::Rng& rng);

  // State features consumed by every head. For SPN-v2 this runs the shared
  // extractor once; reuse the result for V, Q1 and Q2 on the same states.
  Var Encode(Graph& g, const StateBatch& batch);
  Var Value(Graph& g, Var encoded);
  // `which` is 0 or 1; `action` is the tanh-box action, 2 x B.
  Var Q(Graph& g, int which, Var encoded, Var action);

  ParamRefs Params();
  // Everything V(s) depends on, in a fixed order (shared extractor first).
  ParamRefs ValueParams();
  const ModelConfig& config() const { return cfg_; }
  PointExtractor& extractor() { return extractor_; }

  void Save(const std::filesystem::path& path);
  static Critics Load(const std::filesystem::path& path);

 private:
  ModelConfig cfg_;
  PointExtractor extractor_;  // SPN-v2 only
  Mlp value_;
  Mlp q_[2];
};

// target <- tau * source + (1 - tau) * target, element-wise.
void PolyakUpdate(const ParamRefs& source, const ParamRefs& target, double tau);

}  // namespace spnav::models

#endif  // SPNAV_MODELS_CRITICS_H_
