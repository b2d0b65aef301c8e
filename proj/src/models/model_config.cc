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

#include "spnav/models/model_config.h"

#include "spnav/error.h"

namespace spnav::models {

void ModelConfig::Validate() const {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "K must be >= 1");
  if (h < 1) throw Error(ErrorCode::kInvalidArgument, "H must be >= 1");
  if (downsample_bins < 1) throw Error(ErrorCode::kInvalidArgument, "downsample bins must be >= 1");
  for (int w : head_widths) {
    if (w < 1) throw Error(ErrorCode::kInvalidArgument, "head widths must be >= 1");
  }
  for (int w : critic_widths) {
    if (w < 1) throw Error(ErrorCode::kInvalidArgument, "critic widths must be >= 1");
  }
}

nlohmann::json ModelConfig::ToJson() const {
  return {{"actor", ActorKindName(actor)}, {"critic", CriticKindName(critic)},
          {"K", k}, {"H", h}, {"head_widths", head_widths},
          {"critic_widths", critic_widths}, {"downsample_bins", downsample_bins}};
}

ModelConfig ModelConfig::FromJson(const nlohmann::json& j) {
  ModelConfig c;
  if (j.contains("actor")) c.actor = ParseActorKind(j["actor"].get<std::string>());
  if (j.contains("critic")) c.critic = ParseCriticKind(j["critic"].get<std::string>());
  c.k = j.value("K", c.k);
  c.h = j.value("H", c.h);
  c.head_widths = j.value("head_widths", c.head_widths);
  c.critic_widths = j.value("critic_widths", c.critic_widths);
  c.downsample_bins = j.value("downsample_bins", c.downsample_bins);
  c.Validate();
  return c;
}

std::string ActorKindName(ActorKind kind) {
  switch (kind) {
    case ActorKind::kSpn: return "spn_actor";
    case ActorKind::kFcNet: return "fcnet";
    case ActorKind::kPointNet: return "pointnet";
  }
  return "unknown";
}

std::string CriticKindName(CriticKind kind) {
  return kind == CriticKind::kSpn ? "spn_critic" : "spnv2_critic";
}

ActorKind ParseActorKind(const std::string& name) {
  if (name == "spn_actor" || name == "spn") return ActorKind::kSpn;
  if (name == "fcnet") return ActorKind::kFcNet;
  if (name == "pointnet") return ActorKind::kPointNet;
  throw Error(ErrorCode::kInvalidArgument, "unknown actor kind '" + name + "'");
}

CriticKind ParseCriticKind(const std::string& name) {
  if (name == "spn_critic" || name == "spn") return CriticKind::kSpn;
  if (name == "spnv2_critic" || name == "spnv2" || name == "spn-v2") return CriticKind::kSpnV2;
  throw Error(ErrorCode::kInvalidArgument, "unknown critic kind '" + name + "'");
}

}  // namespace spnav::models
