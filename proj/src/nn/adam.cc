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

#include "spnav/nn/adam.h"

#include <cmath>

#include "spnav/error.h"

namespace spnav::nn {

AdamState MakeAdamState(const ParamRefs& params, AdamHyper hyper) {
  AdamState s;
  s.hyper = hyper;
  for (const Param* p : params) {
    s.m.push_back(Matrix::Zero(p->value.rows(), p->value.cols()));
    s.v.push_back(Matrix::Zero(p->value.rows(), p->value.cols()));
  }
  return s;
}

void AdamUpdate(const ParamRefs& params, AdamState& state) {
  if (params.size() != state.m.size()) {
    throw Error(ErrorCode::kShapeMismatch, "adam state does not match parameter list");
  }
  const AdamHyper& h = state.hyper;
  ++state.step;
  const double c1 = 1.0 - std::pow(h.beta1, static_cast<double>(state.step));
  const double c2 = 1.0 - std::pow(h.beta2, static_cast<double>(state.step));
  for (size_t i = 0; i < params.size(); ++i) {
    Param& p = *params[i];
    Matrix& m = state.m[i];
    Matrix& v = state.v[i];
    m = h.beta1 * m + (1.0 - h.beta1) * p.grad;
    v = h.beta2 * v + (1.0 - h.beta2) * p.grad.cwiseAbs2();
    p.value.array() -= h.lr * (m.array() / c1) / ((v.array() / c2).sqrt() + h.eps);
  }
}

}  // namespace spnav::nn
