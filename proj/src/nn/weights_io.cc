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

#include "spnav/nn/weights_io.h"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>

#include "spnav/error.h"

namespace spnav::nn {
namespace {

constexpr char kMagic[4] = {'S', 'P', 'N', 'W'};

template <typename T>
void WriteLE(std::ostream& out, T value) {
  unsigned char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  out.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <typename T>
T ReadLE(std::istream& in, const std::filesystem::path& path) {
  unsigned char bytes[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(bytes), sizeof(T))) {
    throw Error(ErrorCode::kFormat, path.string() + ": truncated weight file");
  }
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  T value;
  std::memcpy(&value, bytes, sizeof(T));
  return value;
}

}  // namespace

void WriteTensors(const std::filesystem::path& path, const std::string& kind,
                  const nlohmann::json& config, const std::vector<std::string>& names,
                  const std::vector<Matrix>& tensors) {
  nlohmann::json header;
  header["format_version"] = kWeightFormatVersion;
  header["model_kind"] = kind;
  header["K"] = config.value("K", 0);
  header["H"] = config.value("H", 0);
  header["config"] = config;
  header["layers"] = nlohmann::json::array();
  for (size_t i = 0; i < tensors.size(); ++i) {
    header["layers"].push_back({{"name", names[i]}, {"rows", tensors[i].rows()}, {"cols", tensors[i].cols()}});
  }
  const std::string text = header.dump();

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write weight file " + path.string());
  out.write(kMagic, 4);
  WriteLE<std::uint32_t>(out, kWeightFormatVersion);
  WriteLE<std::uint64_t>(out, text.size());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  for (const Matrix& t : tensors) {
    for (long r = 0; r < t.rows(); ++r) {
      for (long c = 0; c < t.cols(); ++c) WriteLE<double>(out, t(r, c));
    }
  }
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

void WriteWeights(const std::filesystem::path& path, const std::string& model_kind,
                  const nlohmann::json& config, const ConstParamRefs& params) {
  std::vector<std::string> names;
  std::vector<Matrix> tensors;
  for (const Param* p : params) {
    names.push_back(p->name);
    tensors.push_back(p->value);
  }
  WriteTensors(path, model_kind, config, names, tensors);
}

WeightFile ReadWeights(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open weight file " + path.string());
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) {
    throw Error(ErrorCode::kFormat, path.string() + ": not a weight container");
  }
  const auto version = ReadLE<std::uint32_t>(in, path);
  if (version != kWeightFormatVersion) {
    throw Error(ErrorCode::kFormat, path.string() + ": unsupported format version " + std::to_string(version));
  }
  const auto header_bytes = ReadLE<std::uint64_t>(in, path);
  std::string text(header_bytes, '\0');
  if (!in.read(text.data(), static_cast<std::streamsize>(header_bytes))) {
    throw Error(ErrorCode::kFormat, path.string() + ": truncated header");
  }
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kFormat, path.string() + ": bad header: " + e.what());
  }
  WeightFile file;
  file.model_kind = header.at("model_kind").get<std::string>();
  file.config = header.value("config", nlohmann::json::object());
  for (const auto& layer : header.at("layers")) {
    Matrix t(layer.at("rows").get<long>(), layer.at("cols").get<long>());
    for (long r = 0; r < t.rows(); ++r) {
      for (long c = 0; c < t.cols(); ++c) t(r, c) = ReadLE<double>(in, path);
    }
    file.names.push_back(layer.at("name").get<std::string>());
    file.tensors.push_back(std::move(t));
  }
  return file;
}

void AssignWeights(const WeightFile& file, const ParamRefs& params) {
  if (file.tensors.size() != params.size()) {
    throw Error(ErrorCode::kModelMismatch, "weight file has " + std::to_string(file.tensors.size()) +
                                               " tensors, model expects " + std::to_string(params.size()));
  }
  for (size_t i = 0; i < params.size(); ++i) {
    Param& p = *params[i];
    if (file.names[i] != p.name || file.tensors[i].rows() != p.value.rows() ||
        file.tensors[i].cols() != p.value.cols()) {
      throw Error(ErrorCode::kModelMismatch, "tensor " + std::to_string(i) + " ('" + file.names[i] +
                                                 "') does not match parameter '" + p.name + "'");
    }
    p.value = file.tensors[i];
    p.ZeroGrad();
  }
}

}  // namespace spnav::nn
