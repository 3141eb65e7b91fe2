// seldkit/wav.h

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

#ifndef SELDKIT_WAV_H_
#define SELDKIT_WAV_H_

#include <cstddef>
#include <filesystem>
#include <vector>

namespace seld {

// Channel-major audio buffer. All toolkit audio is float32 in [-1, 1]-ish
// range; spatial-format clips (FOA/MIC) carry 4 channels at 24 kHz.
struct AudioClip {
  int sample_rate = 24000;
  std::vector<std::vector<float>> channels;

  size_t num_channels() const { return channels.size(); }
  size_t num_samples() const { return channels.empty() ? 0 : channels[0].size(); }
  double duration_s() const {
    return sample_rate > 0 ? static_cast<double>(num_samples()) / sample_rate : 0.0;
  }

  static AudioClip Silence(int sample_rate, size_t num_channels, size_t num_samples);
};

enum class WavEncoding {
  kPcm16,
  kPcm24,
  kFloat32,
};

// Reads RIFF/WAVE with PCM16, PCM24 or IEEE float32 payloads (plain or
// WAVE_FORMAT_EXTENSIBLE). Distinct kIo errors for bad magic, unsupported
// codecs, and truncated data.
AudioClip ReadWav(const std::filesystem::path &path);

// float32 is the canonical interchange encoding (bit-exact round trips); PCM
// round trips are exact to within 1 LSB.
void WriteWav(const AudioClip &clip, const std::filesystem::path &path,
              WavEncoding encoding = WavEncoding::kFloat32);

}  // namespace seld

#endif  // SELDKIT_WAV_H_
