// seldkit/stft.cc

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

#include "seldkit/stft.h"

#include <cmath>
#include <string>

#include "seldkit/error.h"
#include "seldkit/fft.h"

namespace seld {

void StftConfig::Validate() const {
  if (sample_rate <= 0 || fft_size <= 0 || window_length <= 0 || hop_length <= 0) {
    ThrowConfig("STFT parameters must be positive");
  }
  if (window_length > fft_size) {
    ThrowConfig("window length exceeds FFT size");
  }
  int label_frame_samples = sample_rate / 10;  // 100 ms
  if (label_frame_samples % hop_length != 0) {
    ThrowConfig("hop length must divide the 100 ms label frame (" +
                std::to_string(label_frame_samples) + " samples)");
  }
}

std::vector<double> HannWindow(int length) {
  std::vector<double> w(length);
  for (int n = 0; n < length; ++n) {
    w[n] = 0.5 - 0.5 * std::cos(2.0 * M_PI * n / length);
  }
  return w;
}

Spectrogram ComputeStft(const AudioClip &clip, const StftConfig &cfg) {
  cfg.Validate();
  if (clip.sample_rate != cfg.sample_rate) {
    ThrowConfig("clip sample rate " + std::to_string(clip.sample_rate) +
                " does not match STFT config " + std::to_string(cfg.sample_rate));
  }
  const size_t num_samples = clip.num_samples();
  const size_t num_channels = clip.num_channels();
  const size_t hop = static_cast<size_t>(cfg.hop_length);
  const size_t num_frames = num_samples == 0 ? 0 : (num_samples + hop - 1) / hop;

  Spectrogram spec;
  spec.num_frames = num_frames;
  spec.num_channels = num_channels;
  spec.num_bins = static_cast<size_t>(cfg.num_bins());
  spec.data.assign(num_frames * num_channels * spec.num_bins, {0.0f, 0.0f});

  const std::vector<double> window = HannWindow(cfg.window_length);
  FftPlan fft(static_cast<size_t>(cfg.fft_size));
  std::vector<std::complex<double>> buffer(static_cast<size_t>(cfg.fft_size));

  for (size_t ch = 0; ch < num_channels; ++ch) {
    const std::vector<float> &samples = clip.channels[ch];
    for (size_t t = 0; t < num_frames; ++t) {
      const size_t start = t * hop;
      for (int n = 0; n < cfg.fft_size; ++n) {
        size_t idx = start + static_cast<size_t>(n);
        double value = 0.0;
        if (n < cfg.window_length && idx < num_samples) {
          value = static_cast<double>(samples[idx]) * window[n];
        }
        buffer[static_cast<size_t>(n)] = {value, 0.0};
      }
      fft.Forward(buffer.data(), buffer.data());
      for (size_t k = 0; k < spec.num_bins; ++k) {
        spec.at(t, ch, k) = {static_cast<float>(buffer[k].real()),
                             static_cast<float>(buffer[k].imag())};
      }
    }
  }
  return spec;
}

}  // namespace seld
