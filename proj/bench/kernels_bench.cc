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

// Parallel kernels against their serial references. Run with
// OMP_NUM_THREADS set to compare thread counts; on one core the two columns
// measure only the OpenMP overhead.

#include <numbers>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "spnav/kernels/point_pool.h"
#include "spnav/kernels/raycast.h"
#include "spnav/world/scenario.h"

namespace {

using spnav::kernels::PointPoolWeights;

const spnav::world::Scenario& Room() {
  static const spnav::world::Scenario room =
      spnav::world::Scenario::Load(std::string(SPNAV_DATA_DIR) + "/scenarios/env3.json");
  return room;
}

std::vector<double> Angles(int n) {
  std::vector<double> a(n);
  for (int i = 0; i < n; ++i) a[i] = -std::numbers::pi + 2.0 * std::numbers::pi * i / n;
  return a;
}

template <bool kParallel>
void BM_CastRays(benchmark::State& state) {
  const auto angles = Angles(static_cast<int>(state.range(0)));
  std::vector<double> out(angles.size());
  const spnav::world::Point origin(6.0, 4.2);
  for (auto _ : state) {
    if constexpr (kParallel) {
      spnav::kernels::CastRays(Room().edges(), origin, angles, 30.0, out);
    } else {
      spnav::kernels::CastRaysSerial(Room().edges(), origin, angles, 30.0, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CastRays<true>)->Arg(512)->Arg(1080);
BENCHMARK(BM_CastRays<false>)->Arg(512)->Arg(1080);

struct PoolFixture {
  Eigen::MatrixXd w1, b1, w3, b3, gate;
  std::vector<Eigen::Matrix2Xd> points;
  PoolFixture(int batch, int k, int h) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g(0.0, 0.3);
    auto fill = [&](long r, long c) { return Eigen::MatrixXd::NullaryExpr(r, c, [&] { return g(rng); }); };
    w1 = fill(h, 2);
    b1 = fill(h, 1);
    w3 = fill(k, h);
    b3 = fill(k, 1);
    gate = fill(h, batch).array().abs().min(1.0);
    for (int b = 0; b < batch; ++b) points.push_back(fill(2, 1080));
  }
};

template <bool kParallel>
void BM_PointPool(benchmark::State& state) {
  const PoolFixture f(static_cast<int>(state.range(0)), 20, 64);
  const PointPoolWeights w{f.w1, f.b1, f.w3, f.b3, &f.gate};
  for (auto _ : state) {
    auto r = kParallel ? spnav::kernels::PointPoolForward(f.points, w)
                       : spnav::kernels::PointPoolForwardSerial(f.points, w);
    benchmark::DoNotOptimize(r.pooled.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PointPool<true>)->Arg(1)->Arg(64);
BENCHMARK(BM_PointPool<false>)->Arg(1)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
