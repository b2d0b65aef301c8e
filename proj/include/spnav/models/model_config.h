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

#ifndef SPNAV_MODELS_MODEL_CONFIG_H_
#define SPNAV_MODELS_MODEL_CONFIG_H_

#include <string>
#include <vector>

#include "json.hpp"

namespace spnav::models {

enum class ActorKind { kSpn, kFcNet, kPointNet };
enum class CriticKind { kSpn, kSpnV2 };

struct ModelConfig {
  ActorKind actor = ActorKind::kSpn;
  CriticKind critic = CriticKind::kSpn;
  int k = 20;   // global features
  int h = 64;   // point feature / gate width
  std::vector<int> head_widths{128, 128};
  std::vector<int> critic_widths{256, 256};
  int downsample_bins = 36;

  void Validate() const;
  nlohmann::json ToJson() const;
  static ModelConfig FromJson(const nlohmann::json& j);
};

std::string ActorKindName(ActorKind kind);    // weight-file model_kind
std::string CriticKindName(CriticKind kind);
ActorKind ParseActorKind(const std::string& name);
CriticKind ParseCriticKind(const std::string& name);

}  // namespace spnav::models

#endif  // SPNAV_MODELS_MODEL_CONFIG_H_
