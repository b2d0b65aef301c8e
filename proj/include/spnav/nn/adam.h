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

#ifndef SPNAV_NN_ADAM_H_
#define SPNAV_NN_ADAM_H_

#include <vector>

#include "spnav/nn/param.h"

namespace spnav::nn {

struct AdamHyper {
  double lr = 3e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

// Moments are stored positionally, aligned with the parameter list passed to
// AdamUpdate, so a state can follow a copied model.
struct AdamState {
  AdamHyper hyper;
  long step = 0;
  std::vector<Matrix> m;
  std::vector<Matrix> v;
};

AdamState MakeAdamState(const ParamRefs& params, AdamHyper hyper = {});

// One bias-corrected Adam step using Param::grad.
void AdamUpdate(const ParamRefs& params, AdamState& state);

}  // namespace spnav::nn

#endif  // SPNAV_NN_ADAM_H_
