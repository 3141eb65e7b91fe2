// seldkit/tensor.h

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

#ifndef SELDKIT_TENSOR_H_
#define SELDKIT_TENSOR_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace seld {

// Self-describing header for a persisted tensor. `extra` holds flat
// string-keyed settings (STFT config, source format, thresholds, ...); they
// round-trip exactly through the JSON sidecar.
struct TensorMeta {
  std::string kind;   // "mel_iv", "mel_gcc", "salsa_lite", "maccdoa", ...
  std::string order;  // e.g. "T,C,B" or "T,N,C,3"
  std::map<std::string, std::string> extra;
};

// Row-major float32 tensor. Feature tensors are rank 3 (T, channels, bins);
// the mACCDOA codec uses rank 4 (T, N, C, 3).
struct Tensor {
  std::vector<size_t> dims;
  std::vector<float> data;
  TensorMeta meta;

  size_t element_count() const {
    size_t n = 1;
    for (size_t d : dims) n *= d;
    return dims.empty() ? 0 : n;
  }
};

// On-disk format: `<stem>.bin` (little-endian float32, row-major) plus
// `<stem>.json` (dims, order, kind, extra settings, config hash, version).
// `path` may be the stem, the .bin path or the .json path. Round trips are
// bit-exact; header/payload size mismatches raise kIo.
void WriteTensor(const Tensor &tensor, const std::filesystem::path &path);
Tensor ReadTensor(const std::filesystem::path &path);

// FNV-1a 64-bit, used for config hashes and output manifests.
uint64_t Fnv1a64(const void *data, size_t size);
uint64_t Fnv1a64(const std::string &text);

}  // namespace seld

#endif  // SELDKIT_TENSOR_H_
