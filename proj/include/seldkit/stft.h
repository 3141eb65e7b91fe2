// seldkit/stft.h

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

#ifndef SELDKIT_STFT_H_
#define SELDKIT_STFT_H_

#include <complex>
#include <cstddef>
#include <vector>

#include "seldkit/wav.h"

namespace seld {

// 1024-point FFT over a 40 ms Hann window with 20 ms hop at 24 kHz: five
// hops per 100 ms label frame.
struct StftConfig {
  int sample_rate = 24000;
  int fft_size = 1024;
  int window_length = 960;
  int hop_length = 480;

  int num_bins() const { return fft_size / 2 + 1; }
  double bin_frequency_hz(int bin) const {
    return static_cast<double>(bin) * sample_rate / fft_size;
  }

  // Throws kConfig unless window fits the FFT and the hop divides the 100 ms
  // label frame.
  void Validate() const;
};

// T x channels x bins complex spectrogram, row-major.
struct Spectrogram {
  size_t num_frames = 0;
  size_t num_channels = 0;
  size_t num_bins = 0;
  std::vector<std::complex<float>> data;

  std::complex<float> &at(size_t frame, size_t channel, size_t bin) {
    return data[(frame * num_channels + channel) * num_bins + bin];
  }
  const std::complex<float> &at(size_t frame, size_t channel, size_t bin) const {
    return data[(frame * num_channels + channel) * num_bins + bin];
  }
};

// Frame t covers samples [t*hop, t*hop + window); tail windows are
// zero-padded, so T = ceil(num_samples / hop) and a 60 s clip yields exactly
// 3000 frames. Throws kConfig on sample-rate mismatch.
Spectrogram ComputeStft(const AudioClip &clip, const StftConfig &cfg);

// Periodic Hann window of the given length.
std::vector<double> HannWindow(int length);

}  // namespace seld

#endif  // SELDKIT_STFT_H_
