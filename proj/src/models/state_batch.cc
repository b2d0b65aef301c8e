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

#include "spnav/models/state_batch.h"

#include "spnav/error.h"

namespace spnav::models {

StateBatch MakeStateBatch(std::span<const sensing::Observation* const> observations) {
  if (observations.empty()) throw Error(ErrorCode::kEmptyInput, "empty observation batch");
  const long batch = static_cast<long>(observations.size());
  const long bins = observations[0]->downsampled.size();
  auto points = std::make_shared<nn::PointBatch>(batch);
  StateBatch out;
  out.downsampled.resize(bins, batch);
  out.goal.resize(4, batch);
  for (long b = 0; b < batch; ++b) {
    const sensing::Observation& o = *observations[b];
    (*points)[b] = o.points.cast<double>();
    if (o.downsampled.size() != bins) throw Error(ErrorCode::kShapeMismatch, "downsampled size differs in batch");
    out.downsampled.col(b) = o.downsampled.cast<double>();
    out.goal.col(b) = o.goal;
  }
  out.points = std::move(points);
  return out;
}

StateBatch MakeStateBatch(const sensing::Observation& observation) {
  const sensing::Observation* one[] = {&observation};
  return MakeStateBatch(one);
}

std::shared_ptr<const nn::PointBatch> DecodeCoordinates(const nn::PointBatch& encoded) {
  auto out = std::make_shared<nn::PointBatch>(encoded.size());
  for (size_t b = 0; b < encoded.size(); ++b) {
    const Eigen::Matrix2Xd& p = encoded[b];
    Eigen::Matrix2Xd xy(2, p.cols());
    for (long i = 0; i < p.cols(); ++i) xy.col(i) = p.col(i) / p.col(i).squaredNorm();
    (*out)[b] = std::move(xy);
  }
  return out;
}

}  // namespace spnav::models
