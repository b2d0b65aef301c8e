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

#include "spnav/nn/graph.h"

#include <cmath>
#include <string>

#include "spnav/error.h"
#include "spnav/kernels/point_pool.h"

namespace spnav::nn {
namespace {

void RequireSameShape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kShapeMismatch,
                std::string(op) + ": (" + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    ") vs (" + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ")");
  }
}

double StableSoftplus(double x) { return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }
double StableSigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace

void Graph::Freeze(const ParamRefs& params) {
  for (const Param* p : params) frozen_.insert(p);
}

Var Graph::Push(Matrix value, bool requires_grad) {
  Node node;
  node.value = std::move(value);
  node.requires_grad = requires_grad && grad_enabled_;
  nodes_.push_back(std::move(node));
  return {static_cast<int>(nodes_.size()) - 1};
}

template <typename Expr>
void Graph::Accumulate(Var v, const Expr& contribution) {
  Node& n = nodes_[v.id];
  if (!n.requires_grad) return;
  if (n.grad.size() == 0) {
    n.grad = contribution;
  } else {
    n.grad += contribution;
  }
}

Var Graph::Constant(Matrix value) { return Push(std::move(value), false); }

Var Graph::Parameter(Param& param) {
  const bool trainable = grad_enabled_ && !frozen_.contains(&param);
  Var v = Push(param.value, trainable);
  if (trainable) nodes_[v.id].param = &param;
  return v;
}

Var Graph::Unary(Var a, Matrix result,
                 std::function<Matrix(const Matrix&, const Matrix&, const Matrix&)> derivative) {
  Var out = Push(std::move(result), needs(a));
  if (nodes_[out.id].requires_grad) {
    nodes_[out.id].backward = [this, a, out, derivative = std::move(derivative)] {
      Accumulate(a, derivative(value(a), value(out), upstream(out.id)));
    };
  }
  return out;
}

Var Graph::Dense(Var w, Var b, Var x) {
  const Matrix& wm = value(w);
  const Matrix& bm = value(b);
  const Matrix& xm = value(x);
  if (wm.cols() != xm.rows() || bm.rows() != wm.rows() || bm.cols() != 1) {
    throw Error(ErrorCode::kShapeMismatch,
                "dense: W " + std::to_string(wm.rows()) + "x" + std::to_string(wm.cols()) + ", b " +
                    std::to_string(bm.rows()) + "x" + std::to_string(bm.cols()) + ", x " +
                    std::to_string(xm.rows()) + "x" + std::to_string(xm.cols()));
  }
  Matrix y(wm.rows(), xm.cols());
  y.noalias() = wm * xm;
  y.colwise() += bm.col(0);
  Var out = Push(std::move(y), needs(w) || needs(b) || needs(x));
  if (nodes_[out.id].requires_grad) {
    nodes_[out.id].backward = [this, w, b, x, out] {
      const Matrix& dy = upstream(out.id);
      if (needs(w)) {
        Matrix dw(dy.rows(), value(x).rows());
        dw.noalias() = dy * value(x).transpose();
        Accumulate(w, dw);
      }
      if (needs(b)) Accumulate(b, dy.rowwise().sum());
      if (needs(x)) {
        Matrix dx(value(w).cols(), dy.cols());
        dx.noalias() = value(w).transpose() * dy;
        Accumulate(x, dx);
      }
    };
  }
  return out;
}

Var Graph::Add(Var a, Var b) {
  RequireSameShape(value(a), value(b), "add");
  Var out = Push(value(a) + value(b), needs(a) || needs(b));
  if (nodes_[out.id].requires_grad) {
    nodes_[out.id].backward = [this, a, b, out] {
      Accumulate(a, upstream(out.id));
      Accumulate(b, upstream(out.id));
    };
  }
  return out;
}

Var Graph::Sub(Var a, Var b) {
  RequireSameShape(value(a), value(b), "sub");
  Var out = Push(value(a) - value(b), needs(a) || needs(b));
  if (nodes_[out.id].requires_grad) {
    nodes_[out.id].backward = [this, a, b, out] {
      Accumulate(a, upstream(out.id));
      Accumulate(b, -upstream(out.id));
    };
  }
  return out;
}

Var Graph::Mul(Var a, Var b) {
  RequireSameShape(value(a), value(b), "mul");
  Var out = Push(value(a).cwiseProduct(value(b)), needs(a) || needs(b));
  if (nodes_[out.id].requires_grad) {
    nodes_[out.id].backward = [this, a, b, out] {
      Accumulate(a, upstream(out.id).cwiseProduct(value(b)));
      Accumulate(b, upstream(out.id).cwiseProduct(value(a)));
    };
  }
  return out;
}

Var Graph::MulColumn(Var a, Var column) {
  const Matrix& am = value(a);
  const Matrix& cm = value(column);
  if (cm.cols() != 1 || cm.rows() != am.rows()) {
    throw Error(ErrorCode::kShapeMismatch, "mul_column: column must be rows(a) x 1");
  }
  Matrix y = am;
  y.array().colwise() *= cm.col(0).array();
  Var out = Push(std::move(y), needs(a) || needs(column));
  if (nodes_[out.id].requires_grad) {
    nodes_[out.id].backward = [this, a, column, out] {
      const Matrix& dy = upstream(out.id);
      if (needs(a)) {
        Matrix da = dy;
        da.array().colwise() *= value(column).col(0).array();
        Accumulate(a, da);
      }
      if (needs(column)) Accumulate(column, dy.cwiseProduct(value(a)).rowwise().sum());
    };
  }
  return out;
}

Var Graph::Scale(Var a, double factor) {
  return Unary(a, value(a) * factor,
               [factor](const Matrix&, const Matrix&, const Matrix& dy) { return Matrix(dy * factor); });
}

Var Graph::AddScalar(Var a, double offset) {
  return Unary(a, value(a).array() + offset,
               [](const Matrix&, const Matrix&, const Matrix& dy) { return dy; });
}

Var Graph::Min(Var a, Var b) {
  RequireSameShape(value(a), value(b), "min");
  const Matrix& am = value(a);
  const Matrix& bm = value(b);
  Matrix take_a = (am.array() <= bm.array()).cast<double>();
  Var out = Push(am.cwiseMin(bm), needs(a) || needs(b));
  if (nodes_[out.id].requires_grad) {
    nodes_[out.id].backward = [this, a, b, out, take_a = std::move(take_a)] {
      Accumulate(a, upstream(out.id).cwiseProduct(take_a));
      Accumulate(b, upstream(out.id).cwiseProduct((1.0 - take_a.array()).matrix()));
    };
  }
  return out;
}

Var Graph::LRelu(Var a) {
  const Matrix& x = value(a);
  return Unary(a, x.cwiseMax(kernels::kLeakySlope * x), [](const Matrix& x, const Matrix&, const Matrix& dy) {
    return Matrix((x.array() > 0.0).select(dy.array(), kernels::kLeakySlope * dy.array()));
  });
}

Var Graph::Sigmoid(Var a) {
  return Unary(a, value(a).unaryExpr(&StableSigmoid),
               [](const Matrix&, const Matrix& y, const Matrix& dy) {
                 return Matrix(dy.array() * y.array() * (1.0 - y.array()));
               });
}

Var Graph::Tanh(Var a) {
  return Unary(a, value(a).array().tanh(), [](const Matrix&, const Matrix& y, const Matrix& dy) {
    return Matrix(dy.array() * (1.0 - y.array().square()));
  });
}

Var Graph::Exp(Var a) {
  return Unary(a, value(a).array().exp(), [](const Matrix&, const Matrix& y, const Matrix& dy) {
    return Matrix(dy.cwiseProduct(y));
  });
}

Var Graph::Log(Var a) {
  return Unary(a, value(a).array().log(), [](const Matrix& x, const Matrix&, const Matrix& dy) {
    return Matrix(dy.array() / x.array());
  });
}

Var Graph::Square(Var a) {
  return Unary(a, value(a).array().square(), [](const Matrix& x, const Matrix&, const Matrix& dy) {
    return Matrix(2.0 * dy.array() * x.array());
  });
}

Var Graph::Softplus(Var a) {
  return Unary(a, value(a).unaryExpr(&StableSoftplus),
               [](const Matrix& x, const Matrix&, const Matrix& dy) {
                 return Matrix(dy.array() * x.unaryExpr(&StableSigmoid).array());
               });
}

Var Graph::Clamp(Var a, double lo, double hi) {
  return Unary(a, value(a).cwiseMax(lo).cwiseMin(hi),
               [lo, hi](const Matrix& x, const Matrix&, const Matrix& dy) {
                 return Matrix((x.array() >= lo && x.array() <= hi).select(dy.array(), 0.0));
               });
}

Var Graph::Sum(Var a) {
  Matrix y(1, 1);
  y(0, 0) = value(a).sum();
  return Unary(a, std::move(y), [](const Matrix& x, const Matrix&, const Matrix& dy) {
    return Matrix(Matrix::Constant(x.rows(), x.cols(), dy(0, 0)));
  });
}

Var Graph::Mean(Var a) {
  Matrix y(1, 1);
  y(0, 0) = value(a).mean();
  return Unary(a, std::move(y), [](const Matrix& x, const Matrix&, const Matrix& dy) {
    return Matrix(Matrix::Constant(x.rows(), x.cols(), dy(0, 0) / static_cast<double>(x.size())));
  });
}

Var Graph::SumRows(Var a) {
  return Unary(a, value(a).colwise().sum(), [](const Matrix& x, const Matrix&, const Matrix& dy) {
    return Matrix(dy.replicate(x.rows(), 1));
  });
}

Var Graph::ConcatRows(std::initializer_list<Var> parts) {
  std::vector<Var> inputs(parts);
  if (inputs.empty()) throw Error(ErrorCode::kShapeMismatch, "concat of nothing");
  const long cols = value(inputs[0]).cols();
  long rows = 0;
  bool any = false;
  for (Var p : inputs) {
    if (value(p).cols() != cols) throw Error(ErrorCode::kShapeMismatch, "concat: column counts differ");
    rows += value(p).rows();
    any = any || needs(p);
  }
  Matrix y(rows, cols);
  long offset = 0;
  for (Var p : inputs) {
    y.middleRows(offset, value(p).rows()) = value(p);
    offset += value(p).rows();
  }
  Var out = Push(std::move(y), any);
  if (nodes_[out.id].requires_grad) {
    nodes_[out.id].backward = [this, inputs, out] {
      long offset = 0;
      for (Var p : inputs) {
        const long r = value(p).rows();
        if (needs(p)) Accumulate(p, upstream(out.id).middleRows(offset, r));
        offset += r;
      }
    };
  }
  return out;
}

Var Graph::SliceRows(Var a, long begin, long count) {
  if (begin < 0 || count < 0 || begin + count > value(a).rows()) {
    throw Error(ErrorCode::kShapeMismatch, "slice_rows out of range");
  }
  Var out = Push(value(a).middleRows(begin, count), needs(a));
  if (nodes_[out.id].requires_grad) {
    nodes_[out.id].backward = [this, a, begin, count, out] {
      Matrix da = Matrix::Zero(value(a).rows(), value(a).cols());
      da.middleRows(begin, count) = upstream(out.id);
      Accumulate(a, da);
    };
  }
  return out;
}

Var Graph::MaxPoolColumns(Var features) {
  const Matrix& f = value(features);
  if (f.cols() < 1) throw Error(ErrorCode::kEmptyInput, "max-pool over zero points");
  Matrix y(f.rows(), 1);
  Eigen::MatrixXi idx(f.rows(), 1);
  for (long j = 0; j < f.rows(); ++j) {
    long best = 0;
    for (long i = 1; i < f.cols(); ++i) {
      if (f(j, i) > f(j, best)) best = i;
    }
    y(j, 0) = f(j, best);
    idx(j, 0) = static_cast<int>(best);
  }
  Var out = Push(std::move(y), needs(features));
  nodes_[out.id].indices = std::move(idx);
  if (nodes_[out.id].requires_grad) {
    nodes_[out.id].backward = [this, features, out] {
      const Matrix& dy = upstream(out.id);
      Matrix df = Matrix::Zero(value(features).rows(), value(features).cols());
      for (long j = 0; j < dy.rows(); ++j) df(j, nodes_[out.id].indices(j, 0)) += dy(j, 0);
      Accumulate(features, df);
    };
  }
  return out;
}

Var Graph::PointPool(std::shared_ptr<const PointBatch> points, Var w1, Var b1, Var gate, Var w3,
                     Var b3) {
  const kernels::PointPoolWeights weights{value(w1), value(b1), value(w3), value(b3),
                                          gate.valid() ? &value(gate) : nullptr};
  kernels::PointPoolResult r = kernels::PointPoolForward(*points, weights);
  const bool any = needs(w1) || needs(b1) || needs(w3) || needs(b3) || (gate.valid() && needs(gate));
  Var out = Push(std::move(r.pooled), any);
  nodes_[out.id].indices = std::move(r.argmax);
  if (nodes_[out.id].requires_grad) {
    nodes_[out.id].backward = [this, points = std::move(points), w1, b1, gate, w3, b3, out] {
      const kernels::PointPoolWeights weights{value(w1), value(b1), value(w3), value(b3),
                                              gate.valid() ? &value(gate) : nullptr};
      kernels::PointPoolGrads g =
          kernels::PointPoolBackward(*points, weights, nodes_[out.id].indices, upstream(out.id));
      Accumulate(w1, g.w1);
      Accumulate(b1, g.b1);
      Accumulate(w3, g.w3);
      Accumulate(b3, g.b3);
      if (gate.valid()) Accumulate(gate, g.gate);
    };
  }
  return out;
}

void Graph::Backward(Var loss) {
  Node& root = nodes_[loss.id];
  if (root.value.size() != 1) throw Error(ErrorCode::kShapeMismatch, "backward needs a scalar loss");
  if (!std::isfinite(root.value(0, 0))) {
    throw Error(ErrorCode::kTrainingFault, "non-finite loss " + std::to_string(root.value(0, 0)));
  }
  for (Node& n : nodes_) n.grad.resize(0, 0);
  if (!root.requires_grad) return;
  root.grad = Matrix::Ones(1, 1);
  for (int id = loss.id; id >= 0; --id) {
    Node& n = nodes_[id];
    if (!n.requires_grad || n.grad.size() == 0) continue;
    if (n.backward) n.backward();
  }
  for (Node& n : nodes_) {
    if (n.param == nullptr || n.grad.size() == 0) continue;
    if (!n.grad.allFinite()) {
      throw Error(ErrorCode::kTrainingFault, "non-finite gradient for parameter " + n.param->name);
    }
    if (n.param->grad.rows() != n.grad.rows() || n.param->grad.cols() != n.grad.cols()) {
      n.param->ZeroGrad();
    }
    n.param->grad += n.grad;
  }
}

}  // namespace spnav::nn
