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

#ifndef SPNAV_EVAL_LIDAR_LABEL_H_
#define SPNAV_EVAL_LIDAR_LABEL_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spnav/sensing/lidar.h"

namespace spnav::eval {

// A named sensor setup "fov|resolution|range|y_offset" (deg|deg|m|m). The
// beam count override pins n where fov / resolution does not round to the
// sensor's real beam count.
struct LidarPreset {
  std::string_view label;
  std::optional<int> beam_count;
};

// The seven setups of the cross-configuration evaluation.
const std::vector<LidarPreset>& LidarPresets();

// Parses "fov|res|range|y_l"; x_l and the mount yaw are zero. Throws
// Error(kMalformedLabel) with the expected grammar on bad input.
sensing::LidarConfig ParseLidarLabel(std::string_view label);
std::string FormatLidarLabel(const sensing::LidarConfig& cfg);

// Splits "a,b,c" into labels.
std::vector<std::string> SplitLabels(std::string_view list);

}  // namespace spnav::eval

#endif  // SPNAV_EVAL_LIDAR_LABEL_H_
