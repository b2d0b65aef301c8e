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

#include "spnav/models/policy.h"

#include <cmath>
#include <numbers>
#include <random>

namespace spnav::models {
namespace {

constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // log(2 pi) / 2

double Softplus(double x) { return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

// log(1 - tanh(u)^2)
double LogTanhJacobian(double u) { return 2.0 * (std::numbers::ln2 - u - Softplus(-2.0 * u)); }

}  // namespace

world::Action ScaleAction(const Eigen::Vector2d& squashed) {
  return {0.5 * (squashed[0] + 1.0) * world::kMaxLinearVelocity,
          squashed[1] * world::kMaxAngularVelocity};
}

Eigen::Vector2d UnscaleAction(const world::Action& action) {
  return {2.0 * action.v / world::kMaxLinearVelocity - 1.0, action.omega / world::kMaxAngularVelocity};
}

double SquashedLogProb(const Eigen::Vector2d& mean, const Eigen::Vector2d& log_std,
                       const Eigen::Vector2d& raw) {
  double lp = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double z = (raw[i] - mean[i]) / std::exp(log_std[i]);
    lp += -0.5 * z * z - log_std[i] - kHalfLogTwoPi - LogTanhJacobian(raw[i]);
  }
  return lp;
}

SampledAction SampleActionWithNoise(const ActorOutput& out, const Eigen::Vector2d& noise) {
  SampledAction s;
  s.raw = out.mean + out.log_std.array().exp().matrix().cwiseProduct(noise);
  s.squashed = s.raw.array().tanh();
  s.action = ScaleAction(s.squashed);
  s.log_prob = SquashedLogProb(out.mean, out.log_std, s.raw);
  return s;
}

SampledAction SampleAction(const ActorOutput& out, nn::Rng& rng) {
  std::normal_distribution<double> normal;
  const double n0 = normal(rng);
  const double n1 = normal(rng);
  return SampleActionWithNoise(out, {n0, n1});
}

world::Action DeterministicAction(const ActorOutput& out) {
  return ScaleAction(out.mean.array().tanh());
}

GraphSample SampleOnGraph(nn::Graph& g, nn::Var mean, nn::Var log_std, const nn::Matrix& noise) {
  nn::Var eps = g.Constant(noise);
  nn::Var raw = g.Add(mean, g.Mul(g.Exp(log_std), eps));
  GraphSample s;
  s.squashed = g.Tanh(raw);
  // -0.5 eps^2 - log_std - log(2 pi)/2 per dimension
  nn::Var gauss = g.Sub(g.Constant(-0.5 * noise.array().square() - kHalfLogTwoPi), log_std);
  // log(1 - tanh^2 u) = 2 (log 2 - u - softplus(-2u))
  nn::Var log_jac = g.Scale(g.AddScalar(g.Scale(g.Add(raw, g.Softplus(g.Scale(raw, -2.0))), -1.0),
                                        std::numbers::ln2),
                            2.0);
  s.log_prob = g.SumRows(g.Sub(gauss, log_jac));
  return s;
}

nn::Matrix StandardNormal(long rows, long cols, nn::Rng& rng) {
  std::normal_distribution<double> normal;
  nn::Matrix m(rows, cols);
  for (long j = 0; j < cols; ++j) {
    for (long i = 0; i < rows; ++i) m(i, j) = normal(rng);
  }
  return m;
}

}  // namespace spnav::models
