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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "spnav/models/policy.h"
#include "spnav/world/robot.h"

namespace spnav::oracles {
namespace {

double Lrelu(double x) { return x > 0.0 ? x : 0.01 * x; }
double Sigm(double x) { return 1.0 / (1.0 + std::exp(-x)); }

Eigen::VectorXd Affine(const nn::Param& w, const nn::Param& b, const Eigen::VectorXd& x) {
  Eigen::VectorXd y(w.value.rows());
  for (long i = 0; i < w.value.rows(); ++i) {
    double acc = b.value(i, 0);
    for (long j = 0; j < w.value.cols(); ++j) acc += w.value(i, j) * x(j);
    y(i) = acc;
  }
  return y;
}

Eigen::VectorXd Concat(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  Eigen::VectorXd out(a.size() + b.size());
  for (long i = 0; i < a.size(); ++i) out(i) = a(i);
  for (long i = 0; i < b.size(); ++i) out(a.size() + i) = b(i);
  return out;
}

nn::ParamRefs Slice(const nn::ParamRefs& p, size_t first, size_t count) {
  return nn::ParamRefs(p.begin() + first, p.begin() + first + count);
}

}  // namespace

// ---- geometry ------------------------------------------------------------

bool InsidePolygon(const std::vector<Vec2>& v, const Vec2& p) {
  const size_t n = v.size();
  bool inside = false;
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2& a = v[j];
    const Vec2& b = v[i];
    // On-edge test: collinear and within the segment's box.
    const double cross = (b.x() - a.x()) * (p.y() - a.y()) - (b.y() - a.y()) * (p.x() - a.x());
    if (std::abs(cross) <= 1e-12 && p.x() >= std::min(a.x(), b.x()) - 1e-12 &&
        p.x() <= std::max(a.x(), b.x()) + 1e-12 && p.y() >= std::min(a.y(), b.y()) - 1e-12 &&
        p.y() <= std::max(a.y(), b.y()) + 1e-12) {
      return true;
    }
    if ((a.y() > p.y()) != (b.y() > p.y())) {
      const double x_at = a.x() + (p.y() - a.y()) * (b.x() - a.x()) / (b.y() - a.y());
      if (p.x() < x_at) inside = !inside;
    }
  }
  return inside;
}

std::vector<Vec2> Vertices(const world::Polygon& polygon) {
  return std::vector<Vec2>(polygon.vertices().begin(), polygon.vertices().end());
}

bool Occupied(const world::Scenario& scenario, const Vec2& p) {
  const auto& b = scenario.bounds();
  if (p.x() <= b.xmin || p.x() >= b.xmax || p.y() <= b.ymin || p.y() >= b.ymax) return true;
  for (const auto& poly : scenario.obstacles()) {
    if (InsidePolygon(Vertices(poly), p)) return true;
  }
  return false;
}

double RayMarch(const world::Scenario& scenario, const Vec2& origin, double angle, double max_range,
                double step) {
  const Vec2 dir(std::cos(angle), std::sin(angle));
  const long n = static_cast<long>(std::ceil(max_range / step));
  for (long i = 1; i <= n; ++i) {
    const double t = std::min(i * step, max_range);
    if (Occupied(scenario, origin + t * dir)) return t;
  }
  return max_range;
}

double RayMarchRefined(const world::Scenario& scenario, const Vec2& origin, double angle,
                       double max_range, double claimed) {
  const double coarse = RayMarch(scenario, origin, angle, max_range);
  if (std::abs(coarse - claimed) <= 2e-3 || claimed >= max_range) return coarse;
  const Vec2 dir(std::cos(angle), std::sin(angle));
  const double fine = 1e-5;
  for (double t = std::max(0.0, claimed - 2e-3); t <= std::min(claimed + 2e-3, max_range); t += fine) {
    if (Occupied(scenario, origin + t * dir)) return t;
  }
  return coarse;
}

double SampledBoundaryDistance(const std::vector<Vec2>& v, const Vec2& p, int samples_per_edge) {
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < v.size(); ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % v.size()];
    for (int s = 0; s <= samples_per_edge; ++s) {
      const double t = static_cast<double>(s) / samples_per_edge;
      best = std::min(best, (a + t * (b - a) - p).norm());
    }
  }
  return best;
}

// ---- sensing -------------------------------------------------------------

std::vector<double> BruteForceDownsample(const std::vector<double>& d, int bins, int window) {
  std::vector<double> y;
  for (int i = 0; i < bins; ++i) {
    double lo = std::numeric_limits<double>::infinity();
    for (int j = 0; j < window; ++j) lo = std::min(lo, d[static_cast<size_t>(i * window + j)]);
    y.push_back(1.0 / lo);
  }
  return y;
}

std::vector<double> ExhaustivePad(const sensing::Scan& scan, const sensing::LidarConfig& cfg,
                                  const sensing::LidarConfig& canonical) {
  const size_t n = scan.distances.size();
  std::vector<double> bearing(n), range(n);
  const auto& m = cfg.mount();
  for (size_t j = 0; j < n; ++j) {
    const double a = scan.beam_angles[j] + m.yaw;
    const double x = m.x + scan.distances[j] * std::sin(a);
    const double y = m.y + scan.distances[j] * std::cos(a);
    bearing[j] = std::atan2(x, y);
    range[j] = std::max(std::hypot(x, y), sensing::kMinRange);
  }
  const double tol = 0.5 * cfg.fov_deg() / cfg.beam_count() * std::numbers::pi / 180.0 +
                     0.5 * canonical.fov_deg() / canonical.beam_count() * std::numbers::pi / 180.0;
  std::vector<double> out;
  for (double target : canonical.beam_angles()) {
    std::vector<double> gaps(n);
    double best_gap = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < n; ++j) {
      double gap = std::fmod(std::abs(bearing[j] - target), 2.0 * std::numbers::pi);
      gaps[j] = std::min(gap, 2.0 * std::numbers::pi - gap);
      best_gap = std::min(best_gap, gaps[j]);
    }
    size_t best = 0;
    while (gaps[best] > best_gap + 1e-9) ++best;
    out.push_back(best_gap <= tol + 1e-9 ? std::min(range[best], canonical.max_range())
                                         : canonical.max_range());
  }
  return out;
}

// ---- networks ------------------------------------------------------------

Matrix NaiveMatmul(const Matrix& a, const Matrix& b) {
  Matrix c = Matrix::Zero(a.rows(), b.cols());
  for (long i = 0; i < a.rows(); ++i) {
    for (long j = 0; j < b.cols(); ++j) {
      double acc = 0.0;
      for (long k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  }
  return c;
}

NaivePool NaiveExtract(const nn::ParamRefs& p, bool gated, const Eigen::Matrix2Xd& points,
                       const Eigen::Vector4d& goal) {
  const nn::Param& w1 = *p[0];
  const nn::Param& b1 = *p[1];
  const nn::Param& w3 = *p[gated ? 4 : 2];
  const nn::Param& b3 = *p[gated ? 5 : 3];
  const long hidden = w1.value.rows();
  Eigen::VectorXd gate = Eigen::VectorXd::Ones(hidden);
  if (gated) {
    const Eigen::VectorXd z = Affine(*p[2], *p[3], goal);
    for (long i = 0; i < hidden; ++i) gate(i) = Sigm(z(i));
  }
  const long k = w3.value.rows();
  NaivePool out;
  out.pooled = Eigen::VectorXd::Constant(k, -std::numeric_limits<double>::infinity());
  out.argmax.assign(k, -1);
  Eigen::VectorXd second = out.pooled;
  for (long i = 0; i < points.cols(); ++i) {
    Eigen::VectorXd h = Affine(w1, b1, points.col(i));
    for (long j = 0; j < hidden; ++j) h(j) = Lrelu(h(j)) * gate(j);
    const Eigen::VectorXd f = Affine(w3, b3, h);
    for (long c = 0; c < k; ++c) {
      if (f(c) > out.pooled(c)) {
        second(c) = out.pooled(c);
        out.pooled(c) = f(c);
        out.argmax[c] = static_cast<int>(i);
      } else {
        second(c) = std::max(second(c), f(c));
      }
    }
  }
  out.margin = std::numeric_limits<double>::infinity();
  if (points.cols() > 1) {
    for (long c = 0; c < k; ++c) out.margin = std::min(out.margin, out.pooled(c) - second(c));
  }
  return out;
}

Eigen::VectorXd NaiveMlp(const nn::ParamRefs& p, size_t first, size_t layers, const Eigen::VectorXd& x,
                         bool activate_last) {
  Eigen::VectorXd h = x;
  for (size_t l = 0; l < layers; ++l) {
    h = Affine(*p[first + 2 * l], *p[first + 2 * l + 1], h);
    if (l + 1 < layers || activate_last) {
      for (long i = 0; i < h.size(); ++i) h(i) = Lrelu(h(i));
    }
  }
  return h;
}

NaiveActorOut NaiveActor(models::Actor& actor, const sensing::Observation& obs) {
  const auto& cfg = actor.config();
  const nn::ParamRefs p = actor.Params();
  const Eigen::Vector4d goal = obs.goal;
  NaiveActorOut out;
  Eigen::VectorXd features;
  size_t next = 0;
  size_t layers = 0;
  if (cfg.actor == models::ActorKind::kFcNet) {
    features = Concat(obs.downsampled.cast<double>(), goal);
    layers = cfg.critic_widths.size();
  } else {
    const bool gated = cfg.actor == models::ActorKind::kSpn;
    Eigen::Matrix2Xd pts = obs.points.cast<double>();
    if (!gated) {
      for (long i = 0; i < pts.cols(); ++i) pts.col(i) /= pts.col(i).squaredNorm();
    }
    const NaivePool pool = NaiveExtract(p, gated, pts, goal);
    out.support = pool.argmax;
    out.margin = pool.margin;
    features = Concat(pool.pooled, goal);
    next = gated ? 6 : 4;
    layers = cfg.head_widths.size();
  }
  const Eigen::VectorXd hidden = NaiveMlp(p, next, layers, features, /*activate_last=*/true);
  next += 2 * layers;
  out.mean = Affine(*p[next], *p[next + 1], hidden);
  out.log_std = Affine(*p[next + 2], *p[next + 3], hidden)
                    .cwiseMax(models::kLogStdMin)
                    .cwiseMin(models::kLogStdMax);
  return out;
}

NaiveCriticOut NaiveCritics(models::Critics& critics, const sensing::Observation& obs,
                            const Eigen::Vector2d& action) {
  const auto& cfg = critics.config();
  const nn::ParamRefs p = critics.Params();
  const Eigen::Vector4d goal = obs.goal;
  NaiveCriticOut out;
  Eigen::VectorXd enc;
  size_t next = 0;
  size_t hidden_layers = 0;
  if (cfg.critic == models::CriticKind::kSpn) {
    enc = Concat(obs.downsampled.cast<double>(), goal);
    hidden_layers = cfg.critic_widths.size();
  } else {
    const NaivePool pool = NaiveExtract(p, true, obs.points.cast<double>(), goal);
    out.margin = pool.margin;
    enc = Concat(pool.pooled, goal);
    next = 6;
    hidden_layers = cfg.head_widths.size();
  }
  const size_t layers = hidden_layers + 1;
  out.v = NaiveMlp(p, next, layers, enc, false)(0);
  next += 2 * layers;
  const Eigen::VectorXd qin = Concat(enc, action);
  out.q1 = NaiveMlp(p, next, layers, qin, false)(0);
  next += 2 * layers;
  out.q2 = NaiveMlp(p, next, layers, qin, false)(0);
  return out;
}

double NaiveSquashedLogProb(const Eigen::Vector2d& mean, const Eigen::Vector2d& log_std,
                            const Eigen::Vector2d& u) {
  double lp = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double sigma = std::exp(log_std(i));
    const double z = (u(i) - mean(i)) / sigma;
    const double t = std::tanh(u(i));
    lp += -0.5 * z * z - std::log(sigma) - 0.5 * std::log(2.0 * std::numbers::pi) -
          std::log(1.0 - t * t);
  }
  return lp;
}

sac::LossReport SacLossOracle(sac::SacAgent& agent, const std::vector<sac::Transition>& batch,
                              const sac::SacHyper& hyper, const Matrix& noise) {
  sac::LossReport r;
  const double n = static_cast<double>(batch.size());
  for (size_t b = 0; b < batch.size(); ++b) {
    const sac::Transition& t = batch[b];
    const NaiveActorOut pi = NaiveActor(agent.actor, *t.state);
    Eigen::Vector2d u;
    for (int i = 0; i < 2; ++i) u(i) = pi.mean(i) + std::exp(pi.log_std(i)) * noise(i, b);
    const Eigen::Vector2d a_tilde(std::tanh(u(0)), std::tanh(u(1)));
    const double log_prob = NaiveSquashedLogProb(pi.mean, pi.log_std, u);
    const NaiveCriticOut c_pi = NaiveCritics(agent.critics, *t.state, a_tilde);
    const double min_q = std::min(c_pi.q1, c_pi.q2);
    r.policy_loss += (hyper.alpha * log_prob - min_q) / n;
    r.mean_log_prob += log_prob / n;

    const Eigen::Vector2d a_box(t.action.v / (0.5 * world::kMaxLinearVelocity) - 1.0,
                                t.action.omega / world::kMaxAngularVelocity);
    const NaiveCriticOut c = NaiveCritics(agent.critics, *t.state, a_box);
    const double v_next = NaiveCritics(agent.target, *t.next_state, a_box).v;
    const double y = t.reward + hyper.gamma * (t.terminal ? 0.0 : 1.0) * v_next;
    r.q1_loss += (c.q1 - y) * (c.q1 - y) / n;
    r.q2_loss += (c.q2 - y) * (c.q2 - y) / n;
    const double v_target = min_q - hyper.alpha * log_prob;
    r.v_loss += (c.v - v_target) * (c.v - v_target) / n;
  }
  return r;
}

// ---- finite differences --------------------------------------------------

double RelativeError(double analytic, double numeric) {
  return std::abs(analytic - numeric) / std::max({std::abs(analytic), std::abs(numeric), 1e-6});
}

GradCheckResult CheckGradients(const nn::ParamRefs& params, const std::function<double()>& loss,
                               const std::function<void()>& backward, double h) {
  nn::ZeroGrads(params);
  backward();
  GradCheckResult res;
  for (nn::Param* p : params) {
    for (long i = 0; i < p->value.size(); ++i) {
      double& x = p->value.data()[i];
      const double saved = x;
      x = saved + h;
      const double up = loss();
      x = saved - h;
      const double down = loss();
      x = saved;
      const double numeric = (up - down) / (2.0 * h);
      const double analytic = p->grad.size() ? p->grad.data()[i] : 0.0;
      const double err = RelativeError(analytic, numeric);
      ++res.checked;
      if (err > res.max_rel_error) {
        res.max_rel_error = err;
        res.worst = p->name + "[" + std::to_string(i) + "] analytic=" + std::to_string(analytic) +
                    " numeric=" + std::to_string(numeric);
      }
    }
  }
  return res;
}

// ---- random inputs -------------------------------------------------------

sensing::Observation RandomObservation(int n, int bins, Rng& rng) {
  std::uniform_real_distribution<double> bearing(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> range(0.3, 5.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  sensing::Observation obs;
  obs.points.resize(2, n);
  for (int i = 0; i < n; ++i) {
    const double a = bearing(rng), d = range(rng);
    obs.points(0, i) = static_cast<float>(std::sin(a) / d);
    obs.points(1, i) = static_cast<float>(std::cos(a) / d);
  }
  obs.downsampled.resize(bins);
  for (int i = 0; i < bins; ++i) obs.downsampled(i) = static_cast<float>(1.0 / range(rng));
  obs.goal = {0.5 + 6.0 * unit(rng), bearing(rng), 0.5 * unit(rng), (unit(rng) - 0.5) * std::numbers::pi};
  return obs;
}

world::Scenario RandomBoxScenario(Rng& rng, int boxes, double size) {
  std::uniform_real_distribution<double> pos(0.5, size - 1.5);
  std::uniform_real_distribution<double> ext(0.2, 1.0);
  std::vector<world::Polygon> obstacles;
  for (int i = 0; i < boxes; ++i) {
    const double x = pos(rng), y = pos(rng), w = ext(rng), h = ext(rng);
    if (i % 3 == 2) {
      obstacles.emplace_back(std::vector<world::Point>{{x, y}, {x + w, y}, {x + 0.5 * w, y + h}});
    } else {
      obstacles.emplace_back(std::vector<world::Point>{{x, y}, {x + w, y}, {x + w, y + h}, {x, y + h}});
    }
  }
  return world::Scenario("random", {0.0, 0.0, size, size}, std::move(obstacles));
}

}  // namespace spnav::oracles
