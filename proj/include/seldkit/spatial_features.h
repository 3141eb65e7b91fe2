// seldkit/spatial_features.h

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

#ifndef SELDKIT_SPATIAL_FEATURES_H_
#define SELDKIT_SPATIAL_FEATURES_H_

#include <string>

#include "seldkit/mel.h"
#include "seldkit/stft.h"
#include "seldkit/tensor.h"
#include "seldkit/wav.h"

namespace seld {

enum class AudioFormat { kFoa, kMic };

enum class FeatureKind { kMelIv, kMelGcc, kSalsaLite };

std::string ToString(AudioFormat format);
std::string ToString(FeatureKind kind);
AudioFormat ParseAudioFormat(const std::string &name);
FeatureKind ParseFeatureKind(const std::string &name);

// Truncated-spectrum phase-difference features: 382 bins reach about 9 kHz at
// the 24 kHz / 1024-point configuration.
struct SalsaConfig {
  int reference_channel = 0;
  int cutoff_bins = 382;
  double speed_of_sound_m_s = 343.0;
};

// Acoustic intensity vectors from an ambiX-ordered (W, Y, Z, X) FOA
// spectrogram: per bin I = Re{conj(W) * (X, Y, Z)}, normalized by
// |W|^2 + (|X|^2 + |Y|^2 + |Z|^2)/3 + eps, then averaged into mel bands with
// weight-normalized triangles. Output (T, 3, bands), components (x, y, z),
// every value in [-1, 1]. Throws kConfig unless the input has 4 channels.
Tensor FoaIntensity(const Spectrogram &spec, const MelBank &bank);

// GCC-PHAT for the 6 pairs (0,1),(0,2),(0,3),(1,2),(1,3),(2,3), center-
// truncated to lags [-num_lags/2, num_lags/2): output (T, 6, num_lags) with
// lag = bin_index - num_lags/2. Positive lag means the pair's second channel
// lags the first. Throws kConfig unless the input has 4 channels.
Tensor GccPhat(const Spectrogram &spec, int num_lags = 64);

// SALSA-lite: channels 0-3 log power spectra truncated to cutoff_bins;
// channels 4-6 inter-channel phase differences against the reference channel,
// scaled by c/(2*pi*f) so a pure delay is frequency-constant (path difference
// in meters). Bin 0 of the phase channels is 0. Output (T, 7, cutoff_bins).
Tensor SalsaLite(const Spectrogram &spec, const StftConfig &stft,
                 const SalsaConfig &cfg);

// Full feature pipeline for one clip: log-mel stacked with the format's
// spatial features along the channel axis. Shapes: (T, 7, 64) FOA/mel_iv,
// (T, 10, 64) MIC/mel_gcc, (T, 7, 382) MIC/salsa_lite. Throws kConfig for
// incompatible format/kind combinations or non-4-channel clips.
Tensor AssembleFeatures(const AudioClip &clip, AudioFormat format,
                        FeatureKind kind, const StftConfig &stft_cfg);

}  // namespace seld

#endif  // SELDKIT_SPATIAL_FEATURES_H_
