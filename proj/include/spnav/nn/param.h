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

#ifndef SPNAV_NN_PARAM_H_
#define SPNAV_NN_PARAM_H_

#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace spnav::nn {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Rng = std::mt19937_64;

// A trainable tensor and its accumulated gradient. Vectors are stored as
// (len x 1) matrices.
struct Param {
  std::string name;
  Matrix value;
  Matrix grad;

  Param() = default;
  Param(std::string name, long rows, long cols)
      : name(std::move(name)), value(Matrix::Zero(rows, cols)), grad(Matrix::Zero(rows, cols)) {}

  void ZeroGrad() { grad.setZero(value.rows(), value.cols()); }
};

using ParamRefs = std::vector<Param*>;
using ConstParamRefs = std::vector<const Param*>;

// Glorot-uniform weights, U(-sqrt(6 / (fan_in + fan_out)), +...).
void GlorotInit(Param& weight, Rng& rng);

void ZeroGrads(const ParamRefs& params);
bool AllFinite(const Matrix& m);

}  // namespace spnav::nn

#endif  // SPNAV_NN_PARAM_H_
