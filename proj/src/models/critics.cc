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

#include "spnav/models/critics.h"

#include "spnav/error.h"
#include "spnav/nn/weights_io.h"

namespace spnav::models {

Critics::Critics(const ModelConfig& cfg, nn::Rng& rng) : cfg_(cfg) {
  cfg_.Validate();
  long in = 0;
  std::vector<int> widths;
  if (cfg_.critic == CriticKind::kSpn) {
    in = cfg_.downsample_bins + 4;
    widths = cfg_.critic_widths;
  } else {
    extractor_ = PointExtractor("critic", cfg_.h, cfg_.k, /*gated=*/true, rng);
    in = cfg_.k + 4;
    widths = cfg_.head_widths;
  }
  value_ = Mlp("critic.v", in, widths, 1, rng);
  q_[0] = Mlp("critic.q1", in + 2, widths, 1, rng);
  q_[1] = Mlp("critic.q2", in + 2, widths, 1, rng);
}

Var Critics::Encode(Graph& g, const StateBatch& batch) {
  Var goal = g.Constant(batch.goal);
  if (cfg_.critic == CriticKind::kSpn) {
    if (batch.downsampled.rows() != cfg_.downsample_bins) {
      throw Error(ErrorCode::kShapeMismatch, "critic expects " + std::to_string(cfg_.downsample_bins) +
                                                 " downsampled values");
    }
    return g.ConcatRows({g.Constant(batch.downsampled), goal});
  }
  return g.ConcatRows({extractor_.Apply(g, batch.points, goal).pooled, goal});
}

Var Critics::Value(Graph& g, Var encoded) { return value_.Apply(g, encoded); }

Var Critics::Q(Graph& g, int which, Var encoded, Var action) {
  return q_[which].Apply(g, g.ConcatRows({encoded, action}));
}

ParamRefs Critics::Params() {
  ParamRefs out;
  if (cfg_.critic == CriticKind::kSpnV2) extractor_.Collect(out);
  value_.Collect(out);
  q_[0].Collect(out);
  q_[1].Collect(out);
  return out;
}

ParamRefs Critics::ValueParams() {
  ParamRefs out;
  if (cfg_.critic == CriticKind::kSpnV2) extractor_.Collect(out);
  value_.Collect(out);
  return out;
}

void Critics::Save(const std::filesystem::path& path) {
  ParamRefs params = Params();
  nn::WriteWeights(path, CriticKindName(cfg_.critic), cfg_.ToJson(),
                   nn::ConstParamRefs(params.begin(), params.end()));
}

Critics Critics::Load(const std::filesystem::path& path) {
  nn::WeightFile file = nn::ReadWeights(path);
  ModelConfig cfg = ModelConfig::FromJson(file.config);
  if (CriticKindName(cfg.critic) != file.model_kind) {
    throw Error(ErrorCode::kModelMismatch, path.string() + ": not a critic file");
  }
  nn::Rng rng(0);
  Critics critics(cfg, rng);
  nn::AssignWeights(file, critics.Params());
  return critics;
}

void PolyakUpdate(const ParamRefs& source, const ParamRefs& target, double tau) {
  if (source.size() != target.size()) throw Error(ErrorCode::kShapeMismatch, "polyak: parameter lists differ");
  for (size_t i = 0; i < source.size(); ++i) {
    target[i]->value = tau * source[i]->value + (1.0 - tau) * target[i]->value;
  }
}

}  // namespace spnav::models
