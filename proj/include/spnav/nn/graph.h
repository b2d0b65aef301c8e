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

#ifndef SPNAV_NN_GRAPH_H_
#define SPNAV_NN_GRAPH_H_

#include <functional>
#include <initializer_list>
#include <memory>
#include <unordered_set>
#include <vector>

#include <Eigen/Core>

#include "spnav/nn/param.h"

namespace spnav::nn {

// Handle to a node of a Graph.
struct Var {
  int id = -1;
  bool valid() const { return id >= 0; }
};

using PointBatch = std::vector<Eigen::Matrix2Xd>;

// Tape-based reverse-mode autodiff over dense matrices. Batched values are
// laid out features x batch. A graph records one forward computation and is
// used by a single thread; build a fresh graph per pass.
class Graph {
 public:
  Graph() = default;
  Graph(const Graph&) = delete;
  Graph& operator=(const Graph&) = delete;

  // Parameters registered after Freeze() enter the graph as constants.
  void Freeze(const ParamRefs& params);
  // Forward-only mode: every parameter is a constant and no backward closures
  // are recorded.
  void DisableGrad() { grad_enabled_ = false; }

  Var Constant(Matrix value);
  Var Parameter(Param& param);

  const Matrix& value(Var v) const { return nodes_[v.id].value; }
  // Gradient of the last Backward() loss w.r.t. `v`; zero-sized if none
  // reached it.
  const Matrix& grad(Var v) const { return nodes_[v.id].grad; }
  double scalar(Var v) const { return nodes_[v.id].value(0, 0); }

  Var Dense(Var w, Var b, Var x);     // w x + b, b broadcast over columns
  Var Add(Var a, Var b);
  Var Sub(Var a, Var b);
  Var Mul(Var a, Var b);              // element-wise
  Var MulColumn(Var a, Var column);   // a .* column, column broadcast
  Var Scale(Var a, double factor);
  Var AddScalar(Var a, double offset);
  Var Min(Var a, Var b);              // element-wise, ties go to `a`
  Var LRelu(Var a);
  Var Sigmoid(Var a);
  Var Tanh(Var a);
  Var Exp(Var a);
  Var Log(Var a);
  Var Square(Var a);
  Var Softplus(Var a);
  Var Clamp(Var a, double lo, double hi);
  Var Sum(Var a);      // -> 1 x 1
  Var Mean(Var a);     // -> 1 x 1
  Var SumRows(Var a);  // column sums, -> 1 x cols
  Var ConcatRows(std::initializer_list<Var> parts);
  Var SliceRows(Var a, long begin, long count);

  // Channel-wise max over columns: (K x n) -> (K x 1). Lowest index wins ties.
  Var MaxPoolColumns(Var features);
  // Fused point-wise extractor + max-pool over a batch of point sets,
  // see kernels::PointPoolForward. `gate` may be invalid (all-ones).
  Var PointPool(std::shared_ptr<const PointBatch> points, Var w1, Var b1, Var gate, Var w3,
                Var b3);
  // Support indices recorded by MaxPoolColumns / PointPool (K x batch).
  const Eigen::MatrixXi& indices(Var v) const { return nodes_[v.id].indices; }

  // Reverse sweep from a 1 x 1 loss. Parameter gradients are added to
  // Param::grad. Throws Error(kTrainingFault) on a non-finite loss or
  // gradient.
  void Backward(Var loss);

  size_t size() const { return nodes_.size(); }

 private:
  struct Node {
    Matrix value;
    Matrix grad;
    bool requires_grad = false;
    Param* param = nullptr;
    Eigen::MatrixXi indices;
    std::function<void()> backward;
  };

  Var Push(Matrix value, bool requires_grad);
  bool needs(Var v) const { return nodes_[v.id].requires_grad; }
  // grad(v) += contribution, allocating on first touch.
  template <typename Expr>
  void Accumulate(Var v, const Expr& contribution);
  const Matrix& upstream(int id) const { return nodes_[id].grad; }
  Var Unary(Var a, Matrix value, std::function<Matrix(const Matrix& x, const Matrix& y,
                                                       const Matrix& dy)> derivative);

  std::vector<Node> nodes_;
  std::unordered_set<const Param*> frozen_;
  bool grad_enabled_ = true;
};

}  // namespace spnav::nn

#endif  // SPNAV_NN_GRAPH_H_
