// seldkit/mel.h

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

#ifndef SELDKIT_MEL_H_
#define SELDKIT_MEL_H_

#include <cstddef>
#include <vector>

#include "seldkit/stft.h"
#include "seldkit/tensor.h"

namespace seld {

// Triangular mel filterbank on the HTK scale (2595*log10(1 + f/700)),
// unit-peak (area-unnormalized) triangles covering 0 Hz to fmax.
class MelBank {
 public:
  MelBank(const StftConfig &stft, int num_bands = 64, double fmax_hz = 12000.0);

  int num_bands() const { return num_bands_; }
  int num_bins() const { return num_bins_; }
  double weight(int band, int bin) const {
    return weights_[static_cast<size_t>(band) * num_bins_ + bin];
  }
  // Per-band weight sums, used by normalized (mean-style) aggregation.
  double band_weight_sum(int band) const { return band_sums_[band]; }
  // Support of a band: bins [begin, end) with nonzero weight.
  int band_begin(int band) const { return band_begin_[band]; }
  int band_end(int band) const { return band_end_[band]; }

  static double HzToMel(double hz);
  static double MelToHz(double mel);

 private:
  int num_bands_;
  int num_bins_;
  std::vector<double> weights_;  // bands x bins, row-major
  std::vector<double> band_sums_;
  std::vector<int> band_begin_;
  std::vector<int> band_end_;
};

// log(mel(|spec|^2) + eps), eps = 1e-10. Output (T, channels, bands).
Tensor LogMel(const Spectrogram &spec, const MelBank &bank);

constexpr double kPowerFloor = 1e-10;

}  // namespace seld

#endif  // SELDKIT_MEL_H_
