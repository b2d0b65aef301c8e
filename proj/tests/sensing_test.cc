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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "spnav/error.h"
#include "spnav/kernels/raycast.h"
#include "spnav/sensing/encoding.h"
#include "spnav/sensing/lidar.h"
#include "spnav/sensing/observation.h"

namespace spnav::sensing {
namespace {

constexpr double kPi = std::numbers::pi;

world::Scenario Room() { return world::Scenario("room", {0, 0, 8, 8}, {}); }

Scan Uniform(const LidarConfig& cfg, double d) {
  Scan s;
  s.beam_angles = cfg.beam_angles();
  s.distances.assign(cfg.beam_count(), d);
  return s;
}

TEST(LidarConfigTest, BeamCounts) {
  EXPECT_EQ(LidarConfig(270, 0.25, 30).beam_count(), 1080);
  EXPECT_EQ(LidarConfig(180, 20, 10).beam_count(), 9);
  EXPECT_EQ(LidarConfig(360, 10, 5).beam_count(), 36);
  EXPECT_EQ(LidarConfig::Canonical().beam_count(), 1080);
  EXPECT_THROW(LidarConfig(0, 1, 5), Error);
  EXPECT_THROW(LidarConfig(400, 1, 5), Error);
  EXPECT_THROW(LidarConfig(360, 0, 5), Error);
  EXPECT_THROW(LidarConfig(360, 1, -1), Error);
}

TEST(LidarConfigTest, BeamLayout) {
  const LidarConfig full(360, 90, 5);
  EXPECT_NEAR(full.beam_angles()[0], -kPi, 1e-15);
  EXPECT_NEAR(full.beam_angles()[2], 0.0, 1e-15);
  const LidarConfig fan(180, 20, 10);
  EXPECT_NEAR(fan.beam_angles()[4], 0.0, 1e-15);  // symmetric about the heading
  EXPECT_NEAR(fan.beam_angles().front(), -fan.beam_angles().back(), 1e-15);
}

TEST(RaycastTest, EmptyRoomAxisBeams) {
  const LidarConfig cfg(360, 90, 30);  // beams at -pi, -pi/2, 0, pi/2
  const Scan s = RaycastScan(Room(), {4, 4, 0}, cfg);
  for (double d : s.distances) EXPECT_NEAR(d, 4.0, 1e-12);
  const Scan short_range = RaycastScan(Room(), {4, 4, 0}, LidarConfig(360, 90, 3));
  for (double d : short_range.distances) EXPECT_EQ(d, 3.0);
}

TEST(RaycastTest, NoObstacleInRangeGivesMaxRange) {
  const world::Scenario big("big", {-100, -100, 100, 100}, {});
  const Scan s = RaycastScan(big, {0, 0, 0.3}, LidarConfig(270, 0.25, 30));
  for (double d : s.distances) EXPECT_EQ(d, 30.0);
}

TEST(RaycastTest, BlockedSensorReturnsMinRange) {
  const world::Scenario s("box", {0, 0, 8, 8}, {world::Polygon({{3, 3}, {5, 3}, {5, 5}, {3, 5}})});
  const Scan scan = RaycastScan(s, {4, 4, 0}, LidarConfig(360, 10, 5));
  EXPECT_TRUE(scan.sensor_blocked);
  for (double d : scan.distances) EXPECT_EQ(d, kMinRange);
}

TEST(RaycastTest, ParallelMatchesSerialKernel) {
  const world::Scenario s = world::Scenario::Load(std::string(SPNAV_DATA_DIR) + "/scenarios/env3.json");
  std::vector<double> angles(4096);
  for (size_t i = 0; i < angles.size(); ++i) angles[i] = -kPi + 2 * kPi * i / angles.size();
  std::vector<double> a(angles.size()), b(angles.size());
  kernels::CastRays(s.edges(), {5.5, 7.2}, angles, 30.0, a);
  kernels::CastRaysSerial(s.edges(), {5.5, 7.2}, angles, 30.0, b);
  EXPECT_EQ(a, b);
}

TEST(RaycastTest, MatchesRayMarchingOracle) {
  const auto r = oracles::RaycastSuite(2000, 21);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(PointSetTest, CenteredExamples) {
  const LidarConfig cfg(360, 90, 5);  // beam 2 is straight ahead, beam 3 at +pi/2
  Scan s = Uniform(cfg, 2.0);
  s.distances[3] = 0.5;
  const ObstaclePointSet p = ToPointSet(s, cfg);
  EXPECT_NEAR(p.encoded(0, 2), 0.0, 1e-15);
  EXPECT_NEAR(p.encoded(1, 2), 0.5, 1e-15);
  EXPECT_NEAR(p.encoded(0, 3), 2.0, 1e-15);
  EXPECT_NEAR(p.encoded(1, 3), 0.0, 1e-15);
  // Centered mount: robot-frame bearing equals the beam angle exactly.
  for (int i = 1; i < 4; ++i) EXPECT_EQ(p.bearings[i], cfg.beam_angles()[i]);
}

TEST(PointSetTest, ForwardOffsetMount) {
  const LidarConfig cfg(180, 20, 10, {0.0, 0.15, 0.0});
  Scan s = Uniform(cfg, 10.0);
  s.distances[4] = 1.0;  // beam at angle 0
  const ObstaclePointSet p = ToPointSet(s, cfg);
  EXPECT_NEAR(p.ranges[4], 1.15, 1e-12);
  EXPECT_NEAR(p.bearings[4], 0.0, 1e-12);
  EXPECT_NEAR(p.encoded(0, 4), 0.0, 1e-12);
  EXPECT_NEAR(p.encoded(1, 4), 1.0 / 1.15, 1e-12);
}

TEST(PointSetTest, FrameCompositionOracle) {
  const auto r = oracles::FramesSuite(4);
  EXPECT_TRUE(r.passed) << r.metric;
}

TEST(PointSetTest, RoundTripAndBound) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> a(-kPi + 1e-9, kPi), d(0.05, 30.0);
  for (int i = 0; i < 10000; ++i) {
    const double alpha = a(rng), dist = d(rng);
    const Eigen::Vector2d p = EncodePoint(alpha, dist);
    EXPECT_LE(p.cwiseAbs().maxCoeff(), 1.0 / kMinRange);
    const auto [alpha2, dist2] = DecodePoint(p);
    EXPECT_NEAR(alpha2, alpha, 1e-9);
    EXPECT_NEAR(dist2, dist, 1e-9);
  }
}

TEST(PointSetTest, SetIndependentOfBeamOrder) {
  const LidarConfig cfg(360, 5, 5);
  Scan s = RaycastScan(world::Scenario::Load(std::string(SPNAV_DATA_DIR) + "/scenarios/env1.json"),
                       {3, 6, 1.0}, cfg);
  const ObstaclePointSet a = ToPointSet(s, cfg);
  std::reverse(s.distances.begin(), s.distances.end());
  std::reverse(s.beam_angles.begin(), s.beam_angles.end());
  const ObstaclePointSet b = ToPointSet(s, cfg);
  for (int i = 0; i < a.size(); ++i) EXPECT_EQ(a.encoded.col(i), b.encoded.col(a.size() - 1 - i));
}

TEST(DownsampleTest, ConstantInput) {
  const std::vector<double> d(1080, 5.0);
  for (double y : MinDownsample(d)) EXPECT_DOUBLE_EQ(y, 0.2);
}

TEST(DownsampleTest, WindowMinimum) {
  std::vector<double> d(1080, 4.0);
  d[0] = 2.0;
  d[1] = 0.5;
  d[2] = 4.0;
  EXPECT_DOUBLE_EQ(MinDownsample(d)[0], 2.0);
}

TEST(DownsampleTest, TrailingBeamsIgnoredAndShapeChecked) {
  std::vector<double> d(1100, 5.0);
  d[1090] = 0.1;
  for (double y : MinDownsample(d)) EXPECT_DOUBLE_EQ(y, 0.2);
  EXPECT_THROW(MinDownsample(std::vector<double>(1000, 1.0)), Error);
}

TEST(DownsampleTest, MatchesBruteForceWindows) {
  const auto r = oracles::DownsampleSuite(100, 8);
  EXPECT_TRUE(r.passed);
}

TEST(DownsampleTest, Monotone) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.05, 5.0);
  std::uniform_int_distribution<int> idx(0, 1079);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> d(1080);
    for (double& x : d) x = u(rng);
    const auto before = MinDownsample(d);
    const int i = idx(rng);
    d[i] *= 0.5;
    const auto after = MinDownsample(d);
    for (size_t k = 0; k < before.size(); ++k) EXPECT_GE(after[k], before[k]);
  }
}

TEST(PaddingTest, CanonicalIsIdentity) {
  const LidarConfig c = LidarConfig::Canonical();
  Scan s = Uniform(c, 3.0);
  s.distances[17] = 0.4;
  EXPECT_EQ(PadScanForFcNet(s, c, c), s.distances);
}

TEST(PaddingTest, RearOfFrontFanIsFree) {
  const LidarConfig fan(180, 20, 10);
  const LidarConfig c = LidarConfig::Canonical();
  const auto out = PadScanForFcNet(Uniform(fan, 1.0), fan, c);
  for (size_t i = 0; i < out.size(); ++i) {
    const double a = c.beam_angles()[i];
    if (std::abs(a) > kPi / 2 + 0.2) EXPECT_EQ(out[i], 5.0) << "beam " << i;
    if (std::abs(a) < kPi / 2 - 0.01) EXPECT_EQ(out[i], 1.0) << "beam " << i;
  }
}

TEST(PaddingTest, ClampsToCanonicalRange) {
  const LidarConfig wide(270, 0.25, 30);
  const auto out = PadScanForFcNet(Uniform(wide, 20.0), wide, LidarConfig::Canonical());
  for (double d : out) EXPECT_LE(d, 5.0);
}

TEST(PaddingTest, MatchesExhaustiveNearestAngle) {
  const auto r = oracles::PaddingSuite(12);
  EXPECT_TRUE(r.passed) << r.metric;
}

TEST(GoalStateTest, BearingConvention) {
  world::RobotState r;
  r.pose = {1, 1, kPi / 2};  // facing +y
  const GoalVelocityState left = MakeGoalState(r, {0, 1});  // to the robot's left
  EXPECT_NEAR(left.bearing, kPi / 2, 1e-12);
  EXPECT_NEAR(left.distance, 1.0, 1e-12);
  const GoalVelocityState ahead = MakeGoalState(r, {1, 3});
  EXPECT_NEAR(ahead.bearing, 0.0, 1e-12);
  const GoalVelocityState behind = MakeGoalState(r, {1, 0});
  EXPECT_NEAR(behind.bearing, kPi, 1e-12);
}

TEST(ObserverTest, DownsampledAlwaysCanonical) {
  const world::Scenario room = Room();
  world::RobotState r;
  r.pose = {4, 4, 0};
  for (const LidarConfig& cfg : {LidarConfig(180, 20, 10), LidarConfig(270, 0.25, 30), LidarConfig::Canonical()}) {
    const Perception p = Observer(cfg).Perceive(room, r, {6, 6});
    EXPECT_EQ(p.downsampled.size(), 36u);
    EXPECT_EQ(p.points.size(), cfg.beam_count());
    const Observation o = p.ToObservation();
    EXPECT_EQ(o.points.cols(), cfg.beam_count());
  }
}

}  // namespace
}  // namespace spnav::sensing
