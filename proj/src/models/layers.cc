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

#include "spnav/models/layers.h"

namespace spnav::models {

DenseLayer::DenseLayer(const std::string& name, long in, long out, nn::Rng& rng)
    : weight(name + ".w", out, in), bias(name + ".b", out, 1) {
  nn::GlorotInit(weight, rng);
}

Mlp::Mlp(const std::string& name, long in, const std::vector<int>& widths, long out, nn::Rng& rng) {
  long fan_in = in;
  for (size_t i = 0; i < widths.size(); ++i) {
    layers_.emplace_back(name + "." + std::to_string(i), fan_in, widths[i], rng);
    fan_in = widths[i];
  }
  layers_.emplace_back(name + ".out", fan_in, out, rng);
}

Var Mlp::Apply(Graph& g, Var x) {
  for (size_t i = 0; i + 1 < layers_.size(); ++i) x = g.LRelu(layers_[i].Apply(g, x));
  return layers_.back().Apply(g, x);
}

void Mlp::Collect(ParamRefs& out) {
  for (DenseLayer& l : layers_) l.Collect(out);
}

PointExtractor::PointExtractor(const std::string& name, int hidden, int k, bool gated, nn::Rng& rng)
    : gated_(gated),
      w1_(name + ".point.w", hidden, 2),
      b1_(name + ".point.b", hidden, 1),
      w2_(name + ".gate.w", gated ? hidden : 0, gated ? 4 : 0),
      b2_(name + ".gate.b", gated ? hidden : 0, gated ? 1 : 0),
      w3_(name + ".feature.w", k, hidden),
      b3_(name + ".feature.b", k, 1) {
  nn::GlorotInit(w1_, rng);
  if (gated_) nn::GlorotInit(w2_, rng);
  nn::GlorotInit(w3_, rng);
}

PointExtractor::Output PointExtractor::Apply(Graph& g, std::shared_ptr<const nn::PointBatch> points,
                                             Var goal) {
  Output out;
  if (gated_) out.gate = g.Sigmoid(g.Dense(g.Parameter(w2_), g.Parameter(b2_), goal));
  out.pooled = g.PointPool(std::move(points), g.Parameter(w1_), g.Parameter(b1_), out.gate,
                           g.Parameter(w3_), g.Parameter(b3_));
  return out;
}

PointExtractor::Output PointExtractor::ApplyReference(Graph& g, const Eigen::Matrix2Xd& points,
                                                      Var goal_column) {
  Output out;
  Var hidden = g.LRelu(g.Dense(g.Parameter(w1_), g.Parameter(b1_), g.Constant(points)));
  if (gated_) {
    out.gate = g.Sigmoid(g.Dense(g.Parameter(w2_), g.Parameter(b2_), goal_column));
    hidden = g.MulColumn(hidden, out.gate);
  }
  out.pooled = g.MaxPoolColumns(g.Dense(g.Parameter(w3_), g.Parameter(b3_), hidden));
  return out;
}

void PointExtractor::Collect(ParamRefs& out) {
  out.push_back(&w1_);
  out.push_back(&b1_);
  if (gated_) {
    out.push_back(&w2_);
    out.push_back(&b2_);
  }
  out.push_back(&w3_);
  out.push_back(&b3_);
}

}  // namespace spnav::models
