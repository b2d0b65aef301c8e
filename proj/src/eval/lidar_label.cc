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

#include "spnav/eval/lidar_label.h"

#include <array>
#include <charconv>

#include "spnav/error.h"

namespace spnav::eval {
namespace {

constexpr std::string_view kGrammar =
    "expected 'fov_deg|resolution_deg|max_range_m|y_offset_m', e.g. '270|0.25|30|0'";

std::string ShortestDouble(double v) {
  std::array<char, 64> buf;
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

}  // namespace

const std::vector<LidarPreset>& LidarPresets() {
  static const std::vector<LidarPreset> presets = {
      {"180|20|10|0", std::nullopt},   {"180|20|10|0.15", std::nullopt},
      {"180|20|10|-0.15", std::nullopt}, {"240|0.47|5.6|0", 512},
      {"270|0.25|30|0", std::nullopt}, {"360|0.33|5|0", 1080},
      {"360|10|5|0", std::nullopt},
  };
  return presets;
}

sensing::LidarConfig ParseLidarLabel(std::string_view label) {
  std::array<double, 4> values{};
  size_t field = 0;
  size_t pos = 0;
  while (true) {
    const size_t bar = label.find('|', pos);
    const std::string_view token = label.substr(pos, bar == std::string_view::npos ? label.npos : bar - pos);
    if (field >= values.size() || token.empty()) {
      throw Error(ErrorCode::kMalformedLabel, "bad lidar label '" + std::string(label) + "': " + std::string(kGrammar));
    }
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), values[field]);
    if (ec != std::errc() || end != token.data() + token.size()) {
      throw Error(ErrorCode::kMalformedLabel, "bad number '" + std::string(token) + "' in lidar label '" +
                                                  std::string(label) + "': " + std::string(kGrammar));
    }
    ++field;
    if (bar == std::string_view::npos) break;
    pos = bar + 1;
  }
  if (field != values.size()) {
    throw Error(ErrorCode::kMalformedLabel, "lidar label '" + std::string(label) + "' has " +
                                                std::to_string(field) + " fields: " + std::string(kGrammar));
  }
  std::optional<int> beams;
  for (const LidarPreset& p : LidarPresets()) {
    if (p.label == label) beams = p.beam_count;
  }
  try {
    return sensing::LidarConfig(values[0], values[1], values[2], {0.0, values[3], 0.0}, beams);
  } catch (const Error& e) {
    throw Error(ErrorCode::kMalformedLabel, "lidar label '" + std::string(label) + "': " + e.what());
  }
}

std::string FormatLidarLabel(const sensing::LidarConfig& cfg) {
  return ShortestDouble(cfg.fov_deg()) + "|" + ShortestDouble(cfg.resolution_deg()) + "|" +
         ShortestDouble(cfg.max_range()) + "|" + ShortestDouble(cfg.mount().y);
}

std::vector<std::string> SplitLabels(std::string_view list) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= list.size()) {
    const size_t comma = list.find(',', pos);
    const std::string_view token = list.substr(pos, comma == std::string_view::npos ? list.npos : comma - pos);
    if (!token.empty()) out.emplace_back(token);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace spnav::eval
