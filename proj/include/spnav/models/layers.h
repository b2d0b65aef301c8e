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

#ifndef SPNAV_MODELS_LAYERS_H_
#define SPNAV_MODELS_LAYERS_H_

#include <memory>
#include <string>
#include <vector>

#include "spnav/nn/graph.h"
#include "spnav/nn/param.h"

namespace spnav::models {

using nn::Graph;
using nn::Matrix;
using nn::Param;
using nn::ParamRefs;
using nn::Var;

struct DenseLayer {
  Param weight;
  Param bias;

  DenseLayer() = default;
  DenseLayer(const std::string& name, long in, long out, nn::Rng& rng);

  Var Apply(Graph& g, Var x) { return g.Dense(g.Parameter(weight), g.Parameter(bias), x); }
  void Collect(ParamRefs& out) { out.push_back(&weight), out.push_back(&bias); }
};

// Dense stack with LReLU on every hidden layer and a linear output layer.
class Mlp {
 public:
  Mlp() = default;
  // `widths` are the hidden widths; the output layer has `out` units.
  Mlp(const std::string& name, long in, const std::vector<int>& widths, long out, nn::Rng& rng);

  Var Apply(Graph& g, Var x);
  void Collect(ParamRefs& out);
  std::vector<DenseLayer>& layers() { return layers_; }

 private:
  std::vector<DenseLayer> layers_;
};

// Point-wise feature extraction followed by channel-wise max-pooling:
//   h(p_i) = lrelu(W1 p_i + b1) .* sigm(W2 g + b2)
//   pooled_j = max_i (W3 h(p_i) + b3)_j
// The gate is computed once per sample since it depends only on g. With
// `gated == false` the gate is dropped (plain PointNet features).
class PointExtractor {
 public:
  PointExtractor() = default;
  PointExtractor(const std::string& name, int hidden, int k, bool gated, nn::Rng& rng);

  struct Output {
    Var pooled;  // K x B
    Var gate;    // H x B, invalid when ungated
  };
  Output Apply(Graph& g, std::shared_ptr<const nn::PointBatch> points, Var goal);

  // Same computation assembled from primitive graph ops for one sample; kept
  // as the reference the fused kernel is tested against.
  Output ApplyReference(Graph& g, const Eigen::Matrix2Xd& points, Var goal_column);

  void Collect(ParamRefs& out);
  bool gated() const { return gated_; }
  int k() const { return static_cast<int>(w3_.value.rows()); }

  Param& gate_bias() { return b2_; }
  Param& gate_weight() { return w2_; }

 private:
  bool gated_ = true;
  Param w1_, b1_, w2_, b2_, w3_, b3_;
};

}  // namespace spnav::models

#endif  // SPNAV_MODELS_LAYERS_H_
