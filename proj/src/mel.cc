// seldkit/mel.cc

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

#include "seldkit/mel.h"

#include <cmath>

#include "seldkit/error.h"

namespace seld {

double MelBank::HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double MelBank::MelToHz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

MelBank::MelBank(const StftConfig &stft, int num_bands, double fmax_hz)
    : num_bands_(num_bands), num_bins_(stft.num_bins()) {
  if (num_bands < 1) ThrowConfig("mel bank needs at least one band");
  if (fmax_hz <= 0.0 || fmax_hz > stft.sample_rate / 2.0) {
    ThrowConfig("mel fmax must lie in (0, Nyquist]");
  }
  weights_.assign(static_cast<size_t>(num_bands_) * num_bins_, 0.0);
  band_sums_.assign(num_bands_, 0.0);
  band_begin_.assign(num_bands_, 0);
  band_end_.assign(num_bands_, 0);

  // num_bands + 2 equally spaced mel points from 0 to fmax.
  std::vector<double> edges_hz(num_bands_ + 2);
  double mel_max = HzToMel(fmax_hz);
  for (int i = 0; i < num_bands_ + 2; ++i) {
    edges_hz[i] = MelToHz(mel_max * i / (num_bands_ + 1));
  }

  for (int m = 0; m < num_bands_; ++m) {
    double f_lo = edges_hz[m];
    double f_center = edges_hz[m + 1];
    double f_hi = edges_hz[m + 2];
    int begin = -1, end = 0;
    for (int k = 0; k < num_bins_; ++k) {
      double f = stft.bin_frequency_hz(k);
      double w = 0.0;
      if (f > f_lo && f < f_center) {
        w = (f - f_lo) / (f_center - f_lo);
      } else if (f >= f_center && f < f_hi) {
        w = (f_hi - f) / (f_hi - f_center);
      }
      weights_[static_cast<size_t>(m) * num_bins_ + k] = w;
      band_sums_[m] += w;
      if (w > 0.0) {
        if (begin < 0) begin = k;
        end = k + 1;
      }
    }
    band_begin_[m] = begin < 0 ? 0 : begin;
    band_end_[m] = end;
  }
}

Tensor LogMel(const Spectrogram &spec, const MelBank &bank) {
  if (static_cast<int>(spec.num_bins) != bank.num_bins()) {
    ThrowConfig("mel bank bin count does not match the spectrogram");
  }
  Tensor out;
  out.dims = {spec.num_frames, spec.num_channels,
              static_cast<size_t>(bank.num_bands())};
  out.data.assign(out.element_count(), 0.0f);

  const size_t bands = static_cast<size_t>(bank.num_bands());
  std::vector<double> power(spec.num_bins);
  for (size_t t = 0; t < spec.num_frames; ++t) {
    for (size_t ch = 0; ch < spec.num_channels; ++ch) {
      for (size_t k = 0; k < spec.num_bins; ++k) {
        power[k] = std::norm(std::complex<double>(spec.at(t, ch, k)));
      }
      float *row = &out.data[(t * spec.num_channels + ch) * bands];
      for (size_t m = 0; m < bands; ++m) {
        double acc = 0.0;
        int mi = static_cast<int>(m);
        for (int k = bank.band_begin(mi); k < bank.band_end(mi); ++k) {
          acc += bank.weight(mi, k) * power[static_cast<size_t>(k)];
        }
        row[m] = static_cast<float>(std::log(acc + kPowerFloor));
      }
    }
  }
  return out;
}

}  // namespace seld
