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

#ifndef SPNAV_NN_WEIGHTS_IO_H_
#define SPNAV_NN_WEIGHTS_IO_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "spnav/nn/param.h"

namespace spnav::nn {

inline constexpr std::uint32_t kWeightFormatVersion = 1;

// Container layout (little-endian):
//   "SPNW" | u32 format_version | u64 header_bytes | header JSON
//   | f64 payload, each tensor row-major in header order.
// The header holds {format_version, model_kind, K, H, config, layers:[{name,
// rows, cols}]}.
struct WeightFile {
  std::string model_kind;
  nlohmann::json config;
  std::vector<std::string> names;
  std::vector<Matrix> tensors;
};

void WriteWeights(const std::filesystem::path& path, const std::string& model_kind,
                  const nlohmann::json& config, const ConstParamRefs& params);
WeightFile ReadWeights(const std::filesystem::path& path);

// Copies tensors into `params` by position, checking names and shapes.
void AssignWeights(const WeightFile& file, const ParamRefs& params);

// Same container for raw matrices (optimizer sidecars, checkpoints).
void WriteTensors(const std::filesystem::path& path, const std::string& kind,
                  const nlohmann::json& config, const std::vector<std::string>& names,
                  const std::vector<Matrix>& tensors);

}  // namespace spnav::nn

#endif  // SPNAV_NN_WEIGHTS_IO_H_
