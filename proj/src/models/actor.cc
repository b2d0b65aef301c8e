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

#include "spnav/models/actor.h"

#include "spnav/error.h"
#include "spnav/nn/weights_io.h"

namespace spnav::models {
namespace {

constexpr double kLogStdInitBias = -1.0;

// Mlp ends in a linear layer; the trunk's last layer is activated here so
// that every hidden width is followed by LReLU before the two output heads.
Var Hidden(Graph& g, Mlp& trunk, Var x) { return g.LRelu(trunk.Apply(g, x)); }

}  // namespace

Actor::Actor(const ModelConfig& cfg, nn::Rng& rng) : cfg_(cfg) {
  cfg_.Validate();
  std::vector<int> widths;
  long in = 0;
  switch (cfg_.actor) {
    case ActorKind::kSpn:
    case ActorKind::kPointNet:
      extractor_ = PointExtractor("actor", cfg_.h, cfg_.k, cfg_.actor == ActorKind::kSpn, rng);
      widths = cfg_.head_widths;
      in = cfg_.k + 4;
      break;
    case ActorKind::kFcNet:
      widths = cfg_.critic_widths;
      in = cfg_.downsample_bins + 4;
      break;
  }
  if (widths.empty()) throw Error(ErrorCode::kInvalidArgument, "actor needs at least one hidden layer");
  const std::vector<int> inner(widths.begin(), widths.end() - 1);
  trunk_ = Mlp("actor.head", in, inner, widths.back(), rng);
  mean_out_ = DenseLayer("actor.mean", widths.back(), 2, rng);
  log_std_out_ = DenseLayer("actor.log_std", widths.back(), 2, rng);
  log_std_out_.bias.value.setConstant(kLogStdInitBias);
}

PolicyStats Actor::Forward(Graph& g, const StateBatch& batch) {
  PolicyStats out;
  Var goal = g.Constant(batch.goal);
  Var features;
  switch (cfg_.actor) {
    case ActorKind::kSpn: {
      PointExtractor::Output e = extractor_.Apply(g, batch.points, goal);
      out.pooled = e.pooled;
      out.gate = e.gate;
      features = g.ConcatRows({e.pooled, goal});
      break;
    }
    case ActorKind::kPointNet: {
      PointExtractor::Output e = extractor_.Apply(g, DecodeCoordinates(*batch.points), goal);
      out.pooled = e.pooled;
      features = g.ConcatRows({e.pooled, goal});
      break;
    }
    case ActorKind::kFcNet:
      if (batch.downsampled.rows() != cfg_.downsample_bins) {
        throw Error(ErrorCode::kModelMismatch, "FC-Net expects a " + std::to_string(cfg_.downsample_bins) +
                                                   "-bin downsampled scan");
      }
      features = g.ConcatRows({g.Constant(batch.downsampled), goal});
      break;
  }
  Var hidden = Hidden(g, trunk_, features);
  out.mean = mean_out_.Apply(g, hidden);
  out.log_std = g.Clamp(log_std_out_.Apply(g, hidden), kLogStdMin, kLogStdMax);
  return out;
}

ActorOutput Actor::Evaluate(const sensing::Observation& obs) {
  if (cfg_.actor != ActorKind::kFcNet && obs.points.cols() == 0) {
    throw Error(ErrorCode::kEmptyInput, "point-set actor given an empty point set");
  }
  Graph g;
  g.DisableGrad();
  PolicyStats s = Forward(g, MakeStateBatch(obs));
  ActorOutput out;
  out.mean = g.value(s.mean).col(0);
  out.log_std = g.value(s.log_std).col(0);
  if (s.pooled.valid()) {
    const Eigen::MatrixXi& idx = g.indices(s.pooled);
    out.support_indices.assign(idx.data(), idx.data() + idx.rows());
    out.support_multiplicity = CountSupport(out.support_indices);
  }
  return out;
}

ParamRefs Actor::Params() {
  ParamRefs out;
  if (cfg_.actor != ActorKind::kFcNet) extractor_.Collect(out);
  trunk_.Collect(out);
  mean_out_.Collect(out);
  log_std_out_.Collect(out);
  return out;
}

void Actor::Save(const std::filesystem::path& path) {
  ParamRefs params = Params();
  nn::WriteWeights(path, ActorKindName(cfg_.actor), cfg_.ToJson(),
                   nn::ConstParamRefs(params.begin(), params.end()));
}

Actor Actor::Load(const std::filesystem::path& path) {
  nn::WeightFile file = nn::ReadWeights(path);
  ModelConfig cfg = ModelConfig::FromJson(file.config);
  if (ActorKindName(cfg.actor) != file.model_kind) {
    throw Error(ErrorCode::kModelMismatch, path.string() + ": model_kind '" + file.model_kind +
                                               "' is not an actor matching its config");
  }
  nn::Rng rng(0);
  Actor actor(cfg, rng);
  nn::AssignWeights(file, actor.Params());
  return actor;
}

std::map<int, int> CountSupport(const std::vector<int>& indices) {
  std::map<int, int> counts;
  for (int i : indices) ++counts[i];
  return counts;
}

}  // namespace spnav::models
