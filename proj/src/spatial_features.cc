// seldkit/spatial_features.cc

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

#include "seldkit/spatial_features.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "seldkit/error.h"
#include "seldkit/fft.h"

namespace seld {

namespace {

constexpr std::array<std::pair<int, int>, 6> kMicPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

void RequireFourChannels(const Spectrogram &spec, const char *what) {
  if (spec.num_channels != 4) {
    ThrowConfig(std::string(what) + " requires a 4-channel spectrogram, got " +
                std::to_string(spec.num_channels));
  }
}

}  // namespace

std::string ToString(AudioFormat format) {
  return format == AudioFormat::kFoa ? "foa" : "mic";
}

std::string ToString(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::kMelIv: return "mel_iv";
    case FeatureKind::kMelGcc: return "mel_gcc";
    case FeatureKind::kSalsaLite: return "salsa_lite";
  }
  return "?";
}

AudioFormat ParseAudioFormat(const std::string &name) {
  if (name == "foa") return AudioFormat::kFoa;
  if (name == "mic") return AudioFormat::kMic;
  ThrowConfig("unknown audio format '" + name + "' (expected foa|mic)");
}

FeatureKind ParseFeatureKind(const std::string &name) {
  if (name == "mel_iv") return FeatureKind::kMelIv;
  if (name == "mel_gcc") return FeatureKind::kMelGcc;
  if (name == "salsa_lite") return FeatureKind::kSalsaLite;
  ThrowConfig("unknown feature kind '" + name +
              "' (expected mel_iv|mel_gcc|salsa_lite)");
}

Tensor FoaIntensity(const Spectrogram &spec, const MelBank &bank) {
  RequireFourChannels(spec, "FoaIntensity");
  if (static_cast<int>(spec.num_bins) != bank.num_bins()) {
    ThrowConfig("mel bank bin count does not match the spectrogram");
  }
  const size_t bands = static_cast<size_t>(bank.num_bands());
  Tensor out;
  out.dims = {spec.num_frames, 3, bands};
  out.data.assign(out.element_count(), 0.0f);

  // ambiX channel order: W, Y, Z, X.
  std::vector<double> ix(spec.num_bins), iy(spec.num_bins), iz(spec.num_bins);
  for (size_t t = 0; t < spec.num_frames; ++t) {
    for (size_t k = 0; k < spec.num_bins; ++k) {
      std::complex<double> w(spec.at(t, 0, k));
      std::complex<double> y(spec.at(t, 1, k));
      std::complex<double> z(spec.at(t, 2, k));
      std::complex<double> x(spec.at(t, 3, k));
      double energy = std::norm(w) +
                      (std::norm(x) + std::norm(y) + std::norm(z)) / 3.0 +
                      kPowerFloor;
      ix[k] = (std::conj(w) * x).real() / energy;
      iy[k] = (std::conj(w) * y).real() / energy;
      iz[k] = (std::conj(w) * z).real() / energy;
    }
    for (size_t m = 0; m < bands; ++m) {
      int mi = static_cast<int>(m);
      double ax = 0.0, ay = 0.0, az = 0.0;
      for (int k = bank.band_begin(mi); k < bank.band_end(mi); ++k) {
        double wgt = bank.weight(mi, k);
        ax += wgt * ix[static_cast<size_t>(k)];
        ay += wgt * iy[static_cast<size_t>(k)];
        az += wgt * iz[static_cast<size_t>(k)];
      }
      double denom = bank.band_weight_sum(mi) + kPowerFloor;
      out.data[(t * 3 + 0) * bands + m] = static_cast<float>(ax / denom);
      out.data[(t * 3 + 1) * bands + m] = static_cast<float>(ay / denom);
      out.data[(t * 3 + 2) * bands + m] = static_cast<float>(az / denom);
    }
  }
  return out;
}

Tensor GccPhat(const Spectrogram &spec, int num_lags) {
  RequireFourChannels(spec, "GccPhat");
  if (num_lags < 2) ThrowConfig("need at least 2 lags");
  const size_t fft_size = (spec.num_bins - 1) * 2;
  if (static_cast<size_t>(num_lags) > fft_size) {
    ThrowConfig("lag count exceeds the FFT size");
  }

  Tensor out;
  out.dims = {spec.num_frames, kMicPairs.size(), static_cast<size_t>(num_lags)};
  out.data.assign(out.element_count(), 0.0f);

  FftPlan fft(fft_size);
  std::vector<std::complex<double>> cross(fft_size);
  const int half = num_lags / 2;

  for (size_t t = 0; t < spec.num_frames; ++t) {
    for (size_t pair = 0; pair < kMicPairs.size(); ++pair) {
      const auto [a, b] = kMicPairs[pair];
      // One-sided cross-spectrum conj(A)*B, PHAT-whitened, then mirrored to
      // the full hermitian spectrum for the inverse transform.
      for (size_t k = 0; k < spec.num_bins; ++k) {
        std::complex<double> sa(spec.at(t, static_cast<size_t>(a), k));
        std::complex<double> sb(spec.at(t, static_cast<size_t>(b), k));
        std::complex<double> c = std::conj(sa) * sb;
        cross[k] = c / (std::abs(c) + kPowerFloor);
      }
      for (size_t k = spec.num_bins; k < fft_size; ++k) {
        cross[k] = std::conj(cross[fft_size - k]);
      }
      fft.Inverse(cross.data(), cross.data());
      float *row = &out.data[(t * kMicPairs.size() + pair) *
                             static_cast<size_t>(num_lags)];
      for (int j = 0; j < num_lags; ++j) {
        int lag = j - half;
        size_t idx = static_cast<size_t>((lag + static_cast<int>(fft_size)) %
                                         static_cast<int>(fft_size));
        row[j] = static_cast<float>(cross[idx].real());
      }
    }
  }
  return out;
}

Tensor SalsaLite(const Spectrogram &spec, const StftConfig &stft,
                 const SalsaConfig &cfg) {
  RequireFourChannels(spec, "SalsaLite");
  if (cfg.cutoff_bins < 1 ||
      static_cast<size_t>(cfg.cutoff_bins) > spec.num_bins) {
    ThrowConfig("SALSA cutoff outside the spectrum");
  }
  if (cfg.reference_channel < 0 || cfg.reference_channel >= 4) {
    ThrowConfig("SALSA reference channel must be in [0, 4)");
  }
  const size_t bins = static_cast<size_t>(cfg.cutoff_bins);
  Tensor out;
  out.dims = {spec.num_frames, 7, bins};
  out.data.assign(out.element_count(), 0.0f);

  // Phase scaled to path-difference meters: arg * c / (2 pi f).
  std::vector<double> phase_scale(bins, 0.0);
  for (size_t k = 1; k < bins; ++k) {
    phase_scale[k] = cfg.speed_of_sound_m_s /
                     (2.0 * M_PI * stft.bin_frequency_hz(static_cast<int>(k)));
  }

  for (size_t t = 0; t < spec.num_frames; ++t) {
    for (size_t ch = 0; ch < 4; ++ch) {
      float *row = &out.data[(t * 7 + ch) * bins];
      for (size_t k = 0; k < bins; ++k) {
        double p = std::norm(std::complex<double>(spec.at(t, ch, k)));
        row[k] = static_cast<float>(std::log(p + kPowerFloor));
      }
    }
    size_t out_ch = 4;
    for (int i = 0; i < 4; ++i) {
      if (i == cfg.reference_channel) continue;
      float *row = &out.data[(t * 7 + out_ch) * bins];
      for (size_t k = 1; k < bins; ++k) {
        std::complex<double> ref(
            spec.at(t, static_cast<size_t>(cfg.reference_channel), k));
        std::complex<double> sig(spec.at(t, static_cast<size_t>(i), k));
        row[k] = static_cast<float>(std::arg(std::conj(ref) * sig) *
                                    phase_scale[k]);
      }
      ++out_ch;
    }
  }
  return out;
}

Tensor AssembleFeatures(const AudioClip &clip, AudioFormat format,
                        FeatureKind kind, const StftConfig &stft_cfg) {
  if (kind == FeatureKind::kMelIv && format != AudioFormat::kFoa) {
    ThrowConfig("mel_iv features require the FOA format");
  }
  if ((kind == FeatureKind::kMelGcc || kind == FeatureKind::kSalsaLite) &&
      format != AudioFormat::kMic) {
    ThrowConfig(ToString(kind) + " features require the MIC format");
  }
  if (clip.num_channels() != 4) {
    ThrowConfig("spatial formats carry 4 channels, clip has " +
                std::to_string(clip.num_channels()));
  }

  Spectrogram spec = ComputeStft(clip, stft_cfg);
  Tensor out;
  if (kind == FeatureKind::kSalsaLite) {
    out = SalsaLite(spec, stft_cfg, SalsaConfig{});
  } else {
    MelBank bank(stft_cfg);
    Tensor mel = LogMel(spec, bank);
    Tensor spatial = kind == FeatureKind::kMelIv ? FoaIntensity(spec, bank)
                                                 : GccPhat(spec, bank.num_bands());
    const size_t bands = mel.dims[2];
    const size_t mel_ch = mel.dims[1];
    const size_t spatial_ch = spatial.dims[1];
    out.dims = {spec.num_frames, mel_ch + spatial_ch, bands};
    out.data.resize(out.element_count());
    for (size_t t = 0; t < spec.num_frames; ++t) {
      std::copy_n(&mel.data[t * mel_ch * bands], mel_ch * bands,
                  &out.data[t * (mel_ch + spatial_ch) * bands]);
      std::copy_n(&spatial.data[t * spatial_ch * bands], spatial_ch * bands,
                  &out.data[(t * (mel_ch + spatial_ch) + mel_ch) * bands]);
    }
  }

  out.meta.kind = ToString(kind);
  out.meta.order = "T,C,B";
  out.meta.extra["source_format"] = ToString(format);
  out.meta.extra["sample_rate"] = std::to_string(stft_cfg.sample_rate);
  out.meta.extra["fft_size"] = std::to_string(stft_cfg.fft_size);
  out.meta.extra["window"] = "hann";
  out.meta.extra["window_length"] = std::to_string(stft_cfg.window_length);
  out.meta.extra["hop_length"] = std::to_string(stft_cfg.hop_length);
  if (kind != FeatureKind::kSalsaLite) {
    out.meta.extra["mel_bands"] = "64";
    out.meta.extra["mel_scale"] = "htk";
    out.meta.extra["mel_fmax_hz"] = "12000";
  }
  if (kind == FeatureKind::kSalsaLite) {
    out.meta.extra["cutoff_bins"] = std::to_string(SalsaConfig{}.cutoff_bins);
    out.meta.extra["speed_of_sound_m_s"] = "343";
    out.meta.extra["phase_norm"] = "c_over_2pif";
  }
  return out;
}

}  // namespace seld
