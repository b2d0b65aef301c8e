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

#include "spnav/kernels/point_pool.h"

#include <vector>

#include "spnav/error.h"

namespace spnav::kernels {
namespace {

void CheckShapes(std::span<const Eigen::Matrix2Xd> points, const PointPoolWeights& w) {
  const long h = w.w1.rows();
  if (w.w1.cols() != 2 || w.b1.rows() != h || w.w3.cols() != h || w.b3.rows() != w.w3.rows()) {
    throw Error(ErrorCode::kShapeMismatch, "point pool weight shapes do not conform");
  }
  if (w.gate && (w.gate->rows() != h || w.gate->cols() != static_cast<long>(points.size()))) {
    throw Error(ErrorCode::kShapeMismatch, "point pool gate must be H x batch");
  }
  for (const auto& p : points) {
    if (p.cols() == 0) throw Error(ErrorCode::kEmptyInput, "point set is empty");
  }
}

double LRelu(double z) { return z > 0.0 ? z : kLeakySlope * z; }

}  // namespace

PointPoolResult PointPoolForward(std::span<const Eigen::Matrix2Xd> points,
                                 const PointPoolWeights& w) {
  CheckShapes(points, w);
  const long batch = static_cast<long>(points.size());
  const long k = w.w3.rows();
  PointPoolResult r{Eigen::MatrixXd(k, batch), Eigen::MatrixXi(k, batch)};
#pragma omp parallel
  {
    Eigen::MatrixXd hidden, features;
#pragma omp for schedule(static)
    for (long b = 0; b < batch; ++b) {
      const Eigen::Matrix2Xd& p = points[b];
      hidden.noalias() = w.w1 * p;
      hidden.colwise() += w.b1.col(0);
      hidden = hidden.cwiseMax(kLeakySlope * hidden);
      if (w.gate) hidden.array().colwise() *= w.gate->col(b).array();
      features.noalias() = w.w3 * hidden;
      for (long j = 0; j < k; ++j) {
        long best = 0;
        double best_value = features(j, 0);
        for (long i = 1; i < features.cols(); ++i) {
          if (features(j, i) > best_value) {
            best_value = features(j, i);
            best = i;
          }
        }
        r.pooled(j, b) = best_value + w.b3(j, 0);
        r.argmax(j, b) = static_cast<int>(best);
      }
    }
  }
  return r;
}

PointPoolResult PointPoolForwardSerial(std::span<const Eigen::Matrix2Xd> points,
                                       const PointPoolWeights& w) {
  CheckShapes(points, w);
  const long batch = static_cast<long>(points.size());
  const long h = w.w1.rows(), k = w.w3.rows();
  PointPoolResult r{Eigen::MatrixXd(k, batch), Eigen::MatrixXi(k, batch)};
  std::vector<double> gated(h);
  for (long b = 0; b < batch; ++b) {
    for (long j = 0; j < k; ++j) r.argmax(j, b) = -1;
    for (long i = 0; i < points[b].cols(); ++i) {
      for (long u = 0; u < h; ++u) {
        const double z = w.w1(u, 0) * points[b](0, i) + w.w1(u, 1) * points[b](1, i) + w.b1(u, 0);
        gated[u] = LRelu(z) * (w.gate ? (*w.gate)(u, b) : 1.0);
      }
      for (long j = 0; j < k; ++j) {
        double f = w.b3(j, 0);
        for (long u = 0; u < h; ++u) f += w.w3(j, u) * gated[u];
        if (r.argmax(j, b) < 0 || f > r.pooled(j, b)) {
          r.pooled(j, b) = f;
          r.argmax(j, b) = static_cast<int>(i);
        }
      }
    }
  }
  return r;
}

PointPoolGrads PointPoolBackward(std::span<const Eigen::Matrix2Xd> points,
                                 const PointPoolWeights& w, const Eigen::MatrixXi& argmax,
                                 const Eigen::MatrixXd& d_pooled) {
  const long batch = static_cast<long>(points.size());
  const long h = w.w1.rows(), k = w.w3.rows();
  PointPoolGrads g;
  g.w1.setZero(h, 2);
  g.b1.setZero(h, 1);
  g.w3.setZero(k, h);
  g.b3.setZero(k, 1);
  if (w.gate) g.gate.setZero(h, batch);

  std::vector<int> support;
  std::vector<Eigen::VectorXd> d_hidden;
  Eigen::VectorXd z(h), act(h), gated(h);
  for (long b = 0; b < batch; ++b) {
    support.clear();
    d_hidden.clear();
    for (long j = 0; j < k; ++j) {
      const double dy = d_pooled(j, b);
      if (dy == 0.0) continue;
      const int i = argmax(j, b);
      size_t slot = 0;
      while (slot < support.size() && support[slot] != i) ++slot;
      if (slot == support.size()) {
        support.push_back(i);
        d_hidden.push_back(Eigen::VectorXd::Zero(h));
      }
      z.noalias() = w.w1 * points[b].col(i);
      z += w.b1.col(0);
      act = z.cwiseMax(kLeakySlope * z);
      gated = w.gate ? Eigen::VectorXd(act.cwiseProduct(w.gate->col(b))) : act;
      g.w3.row(j) += dy * gated.transpose();
      g.b3(j, 0) += dy;
      d_hidden[slot] += dy * w.w3.row(j).transpose();
    }
    for (size_t s = 0; s < support.size(); ++s) {
      const auto p = points[b].col(support[s]);
      z.noalias() = w.w1 * p;
      z += w.b1.col(0);
      act = z.cwiseMax(kLeakySlope * z);
      Eigen::VectorXd d_act = d_hidden[s];
      if (w.gate) {
        g.gate.col(b) += d_hidden[s].cwiseProduct(act);
        d_act = d_act.cwiseProduct(w.gate->col(b));
      }
      for (long u = 0; u < h; ++u) {
        const double dz = d_act[u] * (z[u] > 0.0 ? 1.0 : kLeakySlope);
        g.w1(u, 0) += dz * p[0];
        g.w1(u, 1) += dz * p[1];
        g.b1(u, 0) += dz;
      }
    }
  }
  return g;
}

}  // namespace spnav::kernels
