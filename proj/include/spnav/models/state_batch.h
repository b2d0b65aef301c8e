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

#ifndef SPNAV_MODELS_STATE_BATCH_H_
#define SPNAV_MODELS_STATE_BATCH_H_

#include <memory>
#include <span>

#include "spnav/nn/graph.h"
#include "spnav/sensing/observation.h"

namespace spnav::models {

// Network-ready batch of observations, features x batch.
struct StateBatch {
  std::shared_ptr<const nn::PointBatch> points;  // encoded points per sample
  nn::Matrix downsampled;                        // bins x B
  nn::Matrix goal;                               // 4 x B

  long size() const { return goal.cols(); }
};

StateBatch MakeStateBatch(std::span<const sensing::Observation* const> observations);
StateBatch MakeStateBatch(const sensing::Observation& observation);

// Raw robot-frame coordinates recovered from encoded points, x = p / |p|^2.
std::shared_ptr<const nn::PointBatch> DecodeCoordinates(const nn::PointBatch& encoded);

}  // namespace spnav::models

#endif  // SPNAV_MODELS_STATE_BATCH_H_
