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

#ifndef SPNAV_KERNELS_RAYCAST_H_
#define SPNAV_KERNELS_RAYCAST_H_

#include <span>

#include "spnav/world/geometry.h"

namespace spnav::kernels {

// For each world-frame ray angle, the distance from `origin` to the nearest
// edge, or `max_range` when nothing is hit within range. OpenMP-parallel over
// rays; every ray is independent so the result does not depend on the
// thread count.
void CastRays(std::span<const world::Segment> edges, const world::Point& origin,
              std::span<const double> world_angles, double max_range, std::span<double> out);

// Serial reference for CastRays; identical arithmetic, no threading.
void CastRaysSerial(std::span<const world::Segment> edges, const world::Point& origin,
                    std::span<const double> world_angles, double max_range,
                    std::span<double> out);

}  // namespace spnav::kernels

#endif  // SPNAV_KERNELS_RAYCAST_H_
