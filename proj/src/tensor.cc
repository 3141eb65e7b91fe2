// seldkit/tensor.cc

// Copyright 2026  The seldkit authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "seldkit/tensor.h"

#include <fstream>

#include <json.hpp>

#include "seldkit/error.h"

namespace seld {

namespace {

constexpr int kTensorFormatVersion = 1;

std::filesystem::path Stem(const std::filesystem::path &path) {
  if (path.extension() == ".bin" || path.extension() == ".json") {
    std::filesystem::path stem = path;
    stem.replace_extension();
    return stem;
  }
  return path;
}

std::string CanonicalConfigString(const Tensor &tensor) {
  nlohmann::json j;
  j["kind"] = tensor.meta.kind;
  j["order"] = tensor.meta.order;
  j["extra"] = tensor.meta.extra;
  return j.dump();
}

}  // namespace

uint64_t Fnv1a64(const void *data, size_t size) {
  const uint8_t *p = static_cast<const uint8_t *>(data);
  uint64_t hash = 0xCBF29CE484222325ULL;
  for (size_t i = 0; i < size; ++i) {
    hash ^= p[i];
    hash *= 0x100000001B3ULL;
  }
  return hash;
}

uint64_t Fnv1a64(const std::string &text) {
  return Fnv1a64(text.data(), text.size());
}

void WriteTensor(const Tensor &tensor, const std::filesystem::path &path) {
  if (tensor.dims.empty()) ThrowValidation("tensor must have at least one dim");
  if (tensor.data.size() != tensor.element_count()) {
    ThrowValidation("tensor payload size " + std::to_string(tensor.data.size()) +
                    " does not match dims product " +
                    std::to_string(tensor.element_count()));
  }
  std::filesystem::path stem = Stem(path);

  nlohmann::json header;
  header["version"] = kTensorFormatVersion;
  header["dims"] = tensor.dims;
  header["order"] = tensor.meta.order;
  header["kind"] = tensor.meta.kind;
  header["extra"] = tensor.meta.extra;
  header["config_hash"] = Fnv1a64(CanonicalConfigString(tensor));

  std::filesystem::path json_path = stem;
  json_path += ".json";
  std::ofstream js(json_path, std::ios::trunc);
  if (!js) ThrowIo("cannot open " + json_path.string() + " for writing");
  js << header.dump(2) << "\n";
  if (!js) ThrowIo("failed writing " + json_path.string());
  js.close();

  std::filesystem::path bin_path = stem;
  bin_path += ".bin";
  std::ofstream bs(bin_path, std::ios::binary | std::ios::trunc);
  if (!bs) ThrowIo("cannot open " + bin_path.string() + " for writing");
  bs.write(reinterpret_cast<const char *>(tensor.data.data()),
           static_cast<std::streamsize>(tensor.data.size() * sizeof(float)));
  if (!bs) ThrowIo("failed writing " + bin_path.string());
}

Tensor ReadTensor(const std::filesystem::path &path) {
  std::filesystem::path stem = Stem(path);
  std::filesystem::path json_path = stem;
  json_path += ".json";
  std::filesystem::path bin_path = stem;
  bin_path += ".bin";

  std::ifstream js(json_path);
  if (!js) ThrowIo("cannot open " + json_path.string());
  nlohmann::json header;
  try {
    js >> header;
  } catch (const nlohmann::json::exception &e) {
    ThrowIo(json_path.string() + ": invalid JSON header: " + e.what());
  }

  Tensor tensor;
  try {
    tensor.dims = header.at("dims").get<std::vector<size_t>>();
    tensor.meta.order = header.at("order").get<std::string>();
    tensor.meta.kind = header.at("kind").get<std::string>();
    if (header.contains("extra")) {
      tensor.meta.extra =
          header.at("extra").get<std::map<std::string, std::string>>();
    }
  } catch (const nlohmann::json::exception &e) {
    ThrowIo(json_path.string() + ": incomplete header: " + e.what());
  }

  std::ifstream bs(bin_path, std::ios::binary);
  if (!bs) ThrowIo("cannot open " + bin_path.string());
  bs.seekg(0, std::ios::end);
  std::streamoff bytes = bs.tellg();
  bs.seekg(0);

  size_t expected = tensor.element_count();
  if (static_cast<size_t>(bytes) != expected * sizeof(float)) {
    ThrowIo(bin_path.string() + ": payload holds " +
            std::to_string(bytes / sizeof(float)) + " floats, header dims need " +
            std::to_string(expected));
  }
  tensor.data.resize(expected);
  if (expected > 0) {
    bs.read(reinterpret_cast<char *>(tensor.data.data()),
            static_cast<std::streamsize>(expected * sizeof(float)));
  }
  if (!bs) ThrowIo("failed reading " + bin_path.string());
  return tensor;
}

}  // namespace seld
