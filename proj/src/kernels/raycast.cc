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

#include "spnav/kernels/raycast.h"

#include <algorithm>
#include <cmath>

namespace spnav::kernels {
namespace {

inline double CastOne(std::span<const world::Segment> edges, const world::Point& origin,
                      double angle, double max_range) {
  const world::Point dir{std::cos(angle), std::sin(angle)};
  double best = max_range;
  for (const world::Segment& e : edges) {
    if (auto t = world::RaySegmentDistance(origin, dir, e)) best = std::min(best, *t);
  }
  return best;
}

}  // namespace

void CastRays(std::span<const world::Segment> edges, const world::Point& origin,
              std::span<const double> world_angles, double max_range, std::span<double> out) {
  const long n = static_cast<long>(world_angles.size());
#pragma omp parallel for schedule(static) if (n >= 2048)
  for (long i = 0; i < n; ++i) out[i] = CastOne(edges, origin, world_angles[i], max_range);
}

void CastRaysSerial(std::span<const world::Segment> edges, const world::Point& origin,
                    std::span<const double> world_angles, double max_range,
                    std::span<double> out) {
  for (size_t i = 0; i < world_angles.size(); ++i) {
    out[i] = CastOne(edges, origin, world_angles[i], max_range);
  }
}

}  // namespace spnav::kernels
