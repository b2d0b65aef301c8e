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

#include "spnav/nn/param.h"

#include <cmath>

namespace spnav::nn {

void GlorotInit(Param& weight, Rng& rng) {
  const double limit = std::sqrt(6.0 / static_cast<double>(weight.value.rows() + weight.value.cols()));
  std::uniform_real_distribution<double> u(-limit, limit);
  // Column-major fill order is part of the determinism contract.
  for (long j = 0; j < weight.value.cols(); ++j) {
    for (long i = 0; i < weight.value.rows(); ++i) weight.value(i, j) = u(rng);
  }
}

void ZeroGrads(const ParamRefs& params) {
  for (Param* p : params) p->ZeroGrad();
}

bool AllFinite(const Matrix& m) { return m.allFinite(); }

}  // namespace spnav::nn
