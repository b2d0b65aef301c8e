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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include <gtest/gtest.h>
#include "json.hpp"

#include "oracles.h"
#include "spnav/error.h"
#include "spnav/kernels/point_pool.h"
#include "spnav/nn/adam.h"
#include "spnav/nn/graph.h"
#include "spnav/nn/weights_io.h"

namespace spnav::nn {
namespace {

Param Filled(const std::string& name, const Matrix& m) {
  Param p(name, m.rows(), m.cols());
  p.value = m;
  return p;
}

TEST(DenseTest, IdentityAndBias) {
  Graph g;
  const Matrix x = Matrix::Random(3, 4);
  EXPECT_EQ(g.value(g.Dense(g.Constant(Matrix::Identity(3, 3)), g.Constant(Matrix::Zero(3, 1)), g.Constant(x))), x);
  const Matrix c = Matrix::Random(2, 1);
  const Matrix y = g.value(g.Dense(g.Constant(Matrix::Zero(2, 3)), g.Constant(c), g.Constant(x)));
  for (long j = 0; j < 4; ++j) EXPECT_EQ(y.col(j), c);
}

TEST(DenseTest, ShapeMismatch) {
  Graph g;
  try {
    g.Dense(g.Constant(Matrix::Zero(2, 3)), g.Constant(Matrix::Zero(2, 1)), g.Constant(Matrix::Zero(4, 1)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kShapeMismatch);
  }
}

TEST(DenseTest, MatchesNaiveMatmul) { EXPECT_TRUE(oracles::MatmulSuite(50, 2).passed); }

TEST(ActivationTest, Values) {
  Graph g;
  Matrix x(3, 1);
  x << -1.0, 2.0, 0.0;
  const Matrix l = g.value(g.LRelu(g.Constant(x)));
  EXPECT_DOUBLE_EQ(l(0), -0.01);
  EXPECT_DOUBLE_EQ(l(1), 2.0);
  EXPECT_DOUBLE_EQ(g.value(g.Sigmoid(g.Constant(x)))(2), 0.5);
  Matrix big(2, 1);
  big << 800.0, -800.0;
  const Matrix s = g.value(g.Sigmoid(g.Constant(big)));
  EXPECT_TRUE(AllFinite(s));
  EXPECT_GT(s(0), 0.0);
  const Matrix t = g.value(g.Tanh(g.Constant(Matrix::Random(5, 5) * 10)));
  EXPECT_LT(t.cwiseAbs().maxCoeff(), 1.0 + 1e-15);
}

TEST(ActivationTest, DerivativesMatchFiniteDifferences) {
  const auto r = oracles::ActivationSuite(4);
  EXPECT_TRUE(r.passed) << r.metric;
}

TEST(MaxPoolTest, SinglePoint) {
  Graph g;
  const Matrix f = Matrix::Random(6, 1);
  const Var p = g.MaxPoolColumns(g.Constant(f));
  EXPECT_EQ(g.value(p), f);
  for (long c = 0; c < 6; ++c) EXPECT_EQ(g.indices(p)(c, 0), 0);
}

TEST(MaxPoolTest, KnownMaximaAndTies) {
  Matrix f = Matrix::Zero(3, 5);
  f(0, 3) = 1.0;
  f(1, 1) = 2.0;
  f(1, 4) = 2.0;  // tie: lowest index wins
  Graph g;
  const Var p = g.MaxPoolColumns(g.Constant(f));
  EXPECT_EQ(g.indices(p)(0, 0), 3);
  EXPECT_EQ(g.indices(p)(1, 0), 1);
  EXPECT_EQ(g.indices(p)(2, 0), 0);
}

TEST(MaxPoolTest, MatchesDoubleLoopScan) { EXPECT_TRUE(oracles::MaxPoolSuite(20, 6).passed); }

TEST(MaxPoolTest, GradientRoutesToOneRowPerChannel) {
  Param f = Filled("f", Matrix::Random(4, 7));
  Graph g;
  g.Backward(g.Sum(g.MaxPoolColumns(g.Parameter(f))));
  for (long c = 0; c < 4; ++c) {
    EXPECT_EQ(f.grad.row(c).sum(), 1.0);
    EXPECT_EQ(f.grad.row(c).cwiseAbs().maxCoeff(), 1.0);
  }
}

TEST(BackwardTest, SumGivesOnes) {
  Param x = Filled("x", Matrix::Random(3, 2));
  Graph g;
  g.Backward(g.Sum(g.Parameter(x)));
  EXPECT_EQ(x.grad, Matrix::Ones(3, 2));
}

TEST(BackwardTest, SquaredNormMatchesFiniteDifferences) {
  Param w = Filled("w", Matrix::Random(3, 4));
  const Matrix x = Matrix::Random(4, 2);
  auto build = [&](Graph& g) {
    return g.Sum(g.Square(g.Dense(g.Parameter(w), g.Constant(Matrix::Zero(3, 1)), g.Constant(x))));
  };
  const auto r = oracles::CheckGradients(
      {&w},
      [&] {
        Graph g;
        return g.scalar(build(g));
      },
      [&] {
        Graph g;
        g.Backward(build(g));
      },
      1e-5);
  EXPECT_LE(r.max_rel_error, 1e-4) << r.worst;
}

TEST(BackwardTest, ElementaryOpsMatchFiniteDifferences) {
  Param a = Filled("a", Matrix::Random(3, 2));
  Param b = Filled("b", (Matrix::Random(3, 2).array() + 2.0).matrix());
  Param c = Filled("c", Matrix::Random(3, 1));
  auto build = [&](Graph& g) {
    const Var va = g.Parameter(a), vb = g.Parameter(b), vc = g.Parameter(c);
    Var t = g.Add(g.Mul(va, g.Log(vb)), g.Exp(g.Scale(va, 0.3)));
    t = g.Sub(g.MulColumn(t, vc), g.Softplus(g.AddScalar(va, -0.2)));
    t = g.Min(t, g.Tanh(vb));
    t = g.ConcatRows({g.SliceRows(t, 1, 2), g.Clamp(va, -0.5, 0.5)});
    return g.Add(g.Mean(g.SumRows(g.Square(t))), g.Sum(g.Sigmoid(vb)));
  };
  const auto r = oracles::CheckGradients(
      {&a, &b, &c},
      [&] {
        Graph g;
        g.DisableGrad();
        return g.scalar(build(g));
      },
      [&] {
        Graph g;
        g.Backward(build(g));
      },
      1e-6);
  EXPECT_LE(r.max_rel_error, 1e-5) << r.worst;
}

TEST(BackwardTest, NonFiniteLossIsTrainingFault) {
  Param x = Filled("x", Matrix::Constant(1, 1, -1.0));
  Graph g;
  try {
    g.Backward(g.Sum(g.Log(g.Parameter(x))));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTrainingFault);
  }
}

TEST(BackwardTest, FrozenAndDisabledParamsGetNoGradient) {
  Param x = Filled("x", Matrix::Ones(2, 1));
  Param y = Filled("y", Matrix::Ones(2, 1));
  Graph g;
  g.Freeze({&y});
  g.Backward(g.Sum(g.Mul(g.Parameter(x), g.Parameter(y))));
  EXPECT_EQ(x.grad, Matrix::Ones(2, 1));
  EXPECT_EQ(y.grad, Matrix::Zero(2, 1));
}

TEST(BackwardTest, Deterministic) {
  Param w = Filled("w", Matrix::Random(5, 2));
  const Matrix x = Matrix::Random(2, 9);
  Matrix first;
  for (int rep = 0; rep < 2; ++rep) {
    w.ZeroGrad();
    Graph g;
    g.Backward(g.Sum(g.LRelu(g.Dense(g.Parameter(w), g.Constant(Matrix::Zero(5, 1)), g.Constant(x)))));
    if (rep == 0) first = w.grad;
    else EXPECT_EQ(first, w.grad);
  }
}

TEST(AdamTest, ZeroGradientLeavesParams) {
  Param p = Filled("p", Matrix::Random(3, 3));
  const Matrix before = p.value;
  AdamState s = MakeAdamState({&p});
  p.ZeroGrad();
  AdamUpdate({&p}, s);
  EXPECT_EQ(p.value, before);
}

TEST(AdamTest, FirstStepClosedForm) {
  Param p = Filled("p", Matrix::Zero(3, 1));
  p.grad << 0.5, -2.0, 1e-3;
  AdamHyper h;
  h.lr = 0.01;
  AdamState s = MakeAdamState({&p}, h);
  AdamUpdate({&p}, s);
  for (int i = 0; i < 3; ++i) {
    const double g = p.grad(i);
    EXPECT_NEAR(p.value(i), -h.lr * g / (std::abs(g) + h.eps), 1e-15);
  }
}

TEST(AdamTest, ScalarDescent) {
  Param p = Filled("p", Matrix::Constant(1, 1, 1.0));
  AdamHyper h;
  h.lr = 0.01;
  AdamState s = MakeAdamState({&p}, h);
  double prev = 1.0;
  for (int step = 1; step <= 100; ++step) {
    p.grad(0, 0) = 2.0 * p.value(0, 0);
    AdamUpdate({&p}, s);
    if (step > 3) EXPECT_LT(std::abs(p.value(0, 0)), prev);
    prev = std::abs(p.value(0, 0));
  }
}

TEST(PointPoolTest, ParallelMatchesSerialAndReference) {
  std::mt19937_64 rng(9);
  Param w1("w1", 16, 2), b1("b1", 16, 1), w3("w3", 5, 16), b3("b3", 5, 1);
  for (Param* p : {&w1, &w3}) GlorotInit(*p, rng);
  b1.value = Matrix::Random(16, 1);
  const Matrix gate = (Matrix::Random(16, 6).array() * 0.5 + 0.5).matrix();
  std::vector<Eigen::Matrix2Xd> points;
  for (int b = 0; b < 6; ++b) points.push_back(Eigen::Matrix2Xd::Random(2, 50 + 30 * b));
  const kernels::PointPoolWeights w{w1.value, b1.value, w3.value, b3.value, &gate};
  const auto par = kernels::PointPoolForward(points, w);
  const auto ser = kernels::PointPoolForwardSerial(points, w);
  EXPECT_EQ(par.argmax, ser.argmax);
  EXPECT_LE((par.pooled - ser.pooled).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(WeightsIoTest, RoundTripAndMismatch) {
  const auto dir = std::filesystem::temp_directory_path() / "spnav_weights_test";
  std::filesystem::create_directories(dir);
  Param a = Filled("layer.w", Matrix::Random(3, 2));
  Param b = Filled("layer.b", Matrix::Random(3, 1));
  WriteWeights(dir / "w.spnw", "spn_actor", nlohmann::json{{"K", 3}}, ConstParamRefs{&a, &b});
  const WeightFile f = ReadWeights(dir / "w.spnw");
  EXPECT_EQ(f.model_kind, "spn_actor");
  EXPECT_EQ(f.names, (std::vector<std::string>{"layer.w", "layer.b"}));
  Param a2("layer.w", 3, 2), b2("layer.b", 3, 1);
  AssignWeights(f, {&a2, &b2});
  EXPECT_EQ(a2.value, a.value);
  EXPECT_EQ(b2.value, b.value);
  Param wrong("layer.w", 2, 3);
  try {
    AssignWeights(f, {&wrong, &b2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kModelMismatch);
  }
  // Header layout: magic, version, then row-major little-endian payload.
  std::ifstream in(dir / "w.spnw", std::ios::binary);
  char magic[4];
  in.read(magic, 4);
  EXPECT_EQ(std::string(magic, 4), "SPNW");
  std::uint32_t version = 0;
  in.read(reinterpret_cast<char*>(&version), 4);
  EXPECT_EQ(version, kWeightFormatVersion);
  std::uint64_t header = 0;
  in.read(reinterpret_cast<char*>(&header), 8);
  in.seekg(static_cast<std::streamoff>(16 + header));
  double first = 0, second = 0;
  in.read(reinterpret_cast<char*>(&first), 8);
  in.read(reinterpret_cast<char*>(&second), 8);
  EXPECT_EQ(first, a.value(0, 0));
  EXPECT_EQ(second, a.value(0, 1));  // row-major
  EXPECT_THROW(ReadWeights(dir / "missing.spnw"), Error);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace spnav::nn
