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

#ifndef SPNAV_TESTS_ORACLES_ORACLES_H_
#define SPNAV_TESTS_ORACLES_ORACLES_H_

// Independent reference implementations used only to check the library.
// Nothing here calls the code it is meant to verify, apart from reading
// parameter values and public inputs.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "spnav/models/actor.h"
#include "spnav/models/critics.h"
#include "spnav/sac/replay.h"
#include "spnav/sac/sac_update.h"
#include "spnav/sensing/lidar.h"
#include "spnav/sensing/observation.h"
#include "spnav/world/scenario.h"

namespace spnav::oracles {

using Vec2 = Eigen::Vector2d;
using nn::Matrix;

// ---- geometry ------------------------------------------------------------

// Crossing-number point-in-polygon; points on an edge count as inside.
bool InsidePolygon(const std::vector<Vec2>& vertices, const Vec2& p);
// True when p is outside the bounds or inside any obstacle.
bool Occupied(const world::Scenario& scenario, const Vec2& p);
// First occupied sample along the ray at `step` spacing, or max_range.
double RayMarch(const world::Scenario& scenario, const Vec2& origin, double angle, double max_range,
                double step = 1e-3);
// RayMarch, plus a 0.01 mm re-probe of [claimed - 2 mm, claimed + 2 mm] when
// the coarse march disagrees with `claimed`; resolves corner slivers shorter
// than one coarse step.
double RayMarchRefined(const world::Scenario& scenario, const Vec2& origin, double angle,
                       double max_range, double claimed);
// Distance from p to the polygon boundary by dense sampling of every edge.
double SampledBoundaryDistance(const std::vector<Vec2>& vertices, const Vec2& p, int samples_per_edge);
std::vector<Vec2> Vertices(const world::Polygon& polygon);

// ---- sensing -------------------------------------------------------------

std::vector<double> BruteForceDownsample(const std::vector<double>& d, int bins, int window);
// Nearest-angle padding by scanning every (canonical beam, actual beam) pair.
std::vector<double> ExhaustivePad(const sensing::Scan& scan, const sensing::LidarConfig& cfg,
                                  const sensing::LidarConfig& canonical);

// ---- dense algebra and networks ----------------------------------------

Matrix NaiveMatmul(const Matrix& a, const Matrix& b);

struct NaivePool {
  Eigen::VectorXd pooled;
  std::vector<int> argmax;
  double margin = 0.0;  // smallest gap between a channel max and its runner-up
};
// Scalar-loop point extractor. `params` is [w1, b1, (w2, b2), w3, b3].
NaivePool NaiveExtract(const nn::ParamRefs& params, bool gated, const Eigen::Matrix2Xd& points,
                       const Eigen::Vector4d& goal);
// Dense chain over (w, b) pairs: LReLU after every layer except the last,
// and also after the last when `activate_last`.
Eigen::VectorXd NaiveMlp(const nn::ParamRefs& params, size_t first, size_t layers,
                         const Eigen::VectorXd& x, bool activate_last);

struct NaiveActorOut {
  Eigen::Vector2d mean;
  Eigen::Vector2d log_std;
  std::vector<int> support;
  double margin = 1e300;
};
NaiveActorOut NaiveActor(models::Actor& actor, const sensing::Observation& obs);

struct NaiveCriticOut {
  double v = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double margin = 1e300;
};
// `action` is in the tanh box.
NaiveCriticOut NaiveCritics(models::Critics& critics, const sensing::Observation& obs,
                            const Eigen::Vector2d& action);

// log density of tanh(u) for u ~ N(mean, diag(exp(2 log_std))), direct form.
double NaiveSquashedLogProb(const Eigen::Vector2d& mean, const Eigen::Vector2d& log_std,
                            const Eigen::Vector2d& u);

// Losses of one SAC step recomputed per sample with the scalar networks.
sac::LossReport SacLossOracle(sac::SacAgent& agent, const std::vector<sac::Transition>& batch,
                              const sac::SacHyper& hyper, const Matrix& noise);

// ---- finite differences --------------------------------------------------

struct GradCheckResult {
  double max_rel_error = 0.0;
  long checked = 0;
  std::string worst;
};
// Compares Param::grad (filled by `backward` after zeroing) with central
// differences of `loss` over every element of every parameter.
GradCheckResult CheckGradients(const nn::ParamRefs& params, const std::function<double()>& loss,
                               const std::function<void()>& backward, double h);
double RelativeError(double analytic, double numeric);

// ---- random inputs -------------------------------------------------------

using Rng = std::mt19937_64;
// Random observation with `n` encoded points at ranges in [0.3, 5].
sensing::Observation RandomObservation(int n, int bins, Rng& rng);
// Random box-world scenario on [0, size]^2.
world::Scenario RandomBoxScenario(Rng& rng, int boxes, double size);

// ---- suites --------------------------------------------------------------

struct SuiteResult {
  std::string name;
  bool passed = false;
  double metric = 0.0;     // worst observed value
  double tolerance = 0.0;  // pass threshold for `metric`
  std::string detail;
};

SuiteResult DownsampleSuite(int scans, std::uint64_t seed);
SuiteResult RaycastSuite(int beams, std::uint64_t seed);
SuiteResult CollisionSuite(int poses, std::uint64_t seed);
SuiteResult PaddingSuite(std::uint64_t seed);
SuiteResult FramesSuite(std::uint64_t seed);
SuiteResult MatmulSuite(int trials, std::uint64_t seed);
SuiteResult MaxPoolSuite(int trials, std::uint64_t seed);
SuiteResult ActivationSuite(std::uint64_t seed);
// Per model kind: 10 small random instances, every parameter, h = 1e-5.
SuiteResult GradientSuite(const std::string& model, int instances, std::uint64_t seed);
SuiteResult SacStepSuite(std::uint64_t seed);
SuiteResult DensitySuite(int samples, std::uint64_t seed);
SuiteResult SamplingSuite(int samples, std::uint64_t seed);
SuiteResult PidRolloutSuite(int tasks, std::uint64_t seed);
SuiteResult ReplaySuite(std::uint64_t seed);
SuiteResult PermutationSuite(int trials, std::uint64_t seed);

// Everything `oracle-check` runs, with default sizes.
std::vector<SuiteResult> RunAllSuites(std::uint64_t seed);

}  // namespace spnav::oracles

#endif  // SPNAV_TESTS_ORACLES_ORACLES_H_
