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

#ifndef SPNAV_KERNELS_POINT_POOL_H_
#define SPNAV_KERNELS_POINT_POOL_H_

#include <span>

#include <Eigen/Core>

namespace spnav::kernels {

inline constexpr double kLeakySlope = 0.01;

// Weights of the point-wise feature extractor
//   f(p) = W3 * (lrelu(W1 p + b1) .* gate) + b3
// followed by a channel-wise max over the points of each sample.
struct PointPoolWeights {
  const Eigen::MatrixXd& w1;  // H x 2
  const Eigen::MatrixXd& b1;  // H x 1
  const Eigen::MatrixXd& w3;  // K x H
  const Eigen::MatrixXd& b3;  // K x 1
  // H x B, one gate column per sample; null means an all-ones gate.
  const Eigen::MatrixXd* gate = nullptr;
};

struct PointPoolResult {
  Eigen::MatrixXd pooled;  // K x B
  Eigen::MatrixXi argmax;  // K x B, lowest index among ties
};

// OpenMP-parallel over samples.
PointPoolResult PointPoolForward(std::span<const Eigen::Matrix2Xd> points,
                                 const PointPoolWeights& w);

// Plain-loop reference implementation of PointPoolForward.
PointPoolResult PointPoolForwardSerial(std::span<const Eigen::Matrix2Xd> points,
                                       const PointPoolWeights& w);

struct PointPoolGrads {
  Eigen::MatrixXd w1, b1, w3, b3;
  Eigen::MatrixXd gate;  // H x B, empty when the gate is all-ones
};

// Gradients flow only through each channel's support point, so the backward
// pass touches at most K points per sample. Accumulation order is fixed
// (sample-major), independent of threading.
PointPoolGrads PointPoolBackward(std::span<const Eigen::Matrix2Xd> points,
                                 const PointPoolWeights& w, const Eigen::MatrixXi& argmax,
                                 const Eigen::MatrixXd& d_pooled);

}  // namespace spnav::kernels

#endif  // SPNAV_KERNELS_POINT_POOL_H_
