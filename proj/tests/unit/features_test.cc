// tests/unit/features_test.cc

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

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "../support/oracles.h"
#include "seldkit/error.h"
#include "seldkit/geometry.h"
#include "seldkit/mel.h"
#include "seldkit/spatial_features.h"
#include "seldkit/stft.h"

using seld::AudioClip;
using seld::ComputeStft;
using seld::Doa;
using seld::FoaEncodeGains;
using seld::MelBank;
using seld::Spectrogram;
using seld::StftConfig;
using seld::Tensor;

namespace {

AudioClip NoiseClip(int channels, size_t samples, uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<float> dist(-1.0f, 1.0f);
  AudioClip clip;
  clip.channels.resize(channels);
  for (auto &ch : clip.channels) {
    ch.resize(samples);
    for (float &x : ch) x = dist(rng);
  }
  return clip;
}

// FOA plane wave: mono signal spatialized through the encoding gains
// (ambiX channel order W, Y, Z, X).
AudioClip PlaneWave(const Doa &doa, const std::vector<float> &mono) {
  auto gains = FoaEncodeGains(doa);
  AudioClip clip;
  clip.channels.resize(4);
  for (int ch = 0; ch < 4; ++ch) {
    clip.channels[ch].resize(mono.size());
    for (size_t i = 0; i < mono.size(); ++i) {
      clip.channels[ch][i] = static_cast<float>(gains[ch] * mono[i]);
    }
  }
  return clip;
}

// Circular fractional delay via FFT phase shift (exact for periodic noise).
std::vector<float> FractionalDelay(const std::vector<float> &x,
                                   double delay_samples) {
  const size_t n = seld::NextPowerOfTwo(x.size());
  std::vector<std::complex<double>> buf(n, 0.0);
  for (size_t i = 0; i < x.size(); ++i) buf[i] = x[i];
  seld::FftPlan fft(n);
  fft.Forward(buf.data(), buf.data());
  for (size_t k = 0; k < n; ++k) {
    // Hermitian-symmetric phase ramp: treat bins above n/2 as negative freq.
    double freq = k <= n / 2 ? static_cast<double>(k)
                             : static_cast<double>(k) - static_cast<double>(n);
    double angle = -2.0 * M_PI * freq * delay_samples / static_cast<double>(n);
    buf[k] *= std::complex<double>(std::cos(angle), std::sin(angle));
  }
  fft.Inverse(buf.data(), buf.data());
  std::vector<float> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    out[i] = static_cast<float>(buf[i].real());
  }
  return out;
}

// Unit-normalized mel-aggregated intensity for the middle frame.
seld::Vec3 RecoveredDirection(const Tensor &intensity, size_t frame) {
  const size_t bands = intensity.dims[2];
  double x = 0.0, y = 0.0, z = 0.0;
  for (size_t m = 0; m < bands; ++m) {
    x += intensity.data[(frame * 3 + 0) * bands + m];
    y += intensity.data[(frame * 3 + 1) * bands + m];
    z += intensity.data[(frame * 3 + 2) * bands + m];
  }
  double norm = std::sqrt(x * x + y * y + z * z);
  REQUIRE(norm > 0.0);
  return {x / norm, y / norm, z / norm};
}

}  // namespace

TEST_SUITE_BEGIN("features");

TEST_CASE("stft of silence is all zero") {
  StftConfig cfg;
  AudioClip clip = AudioClip::Silence(24000, 1, 24000);
  Spectrogram spec = ComputeStft(clip, cfg);
  CHECK(spec.num_frames == 50);  // 24000 / 480
  for (const auto &v : spec.data) {
    CHECK(v.real() == 0.0f);
    CHECK(v.imag() == 0.0f);
  }
}

TEST_CASE("stft matches the direct DFT of the windowed frame") {
  StftConfig cfg;
  AudioClip clip = NoiseClip(1, 3000, 42);
  Spectrogram spec = ComputeStft(clip, cfg);

  auto window = seld::HannWindow(cfg.window_length);
  for (size_t frame : {size_t{0}, size_t{2}}) {
    std::vector<double> padded(static_cast<size_t>(cfg.fft_size), 0.0);
    for (int n = 0; n < cfg.window_length; ++n) {
      size_t idx = frame * cfg.hop_length + static_cast<size_t>(n);
      if (idx < clip.num_samples()) {
        padded[static_cast<size_t>(n)] = clip.channels[0][idx] * window[n];
      }
    }
    auto expected = seld::testing::DirectDft(padded);
    for (size_t k = 0; k < spec.num_bins; ++k) {
      std::complex<double> got(spec.at(frame, 0, k));
      CHECK(std::abs(got - expected[k]) < 1e-4);  // float32 storage rounding
    }
  }
}

TEST_CASE("impulse at sample zero sees only the zero-valued window edge") {
  StftConfig cfg;
  AudioClip clip = AudioClip::Silence(24000, 1, 2400);
  clip.channels[0][0] = 1.0f;
  Spectrogram spec = ComputeStft(clip, cfg);
  // hann[0] = 0, so frame 0 is identically zero.
  for (size_t k = 0; k < spec.num_bins; ++k) {
    CHECK(std::abs(std::complex<double>(spec.at(0, 0, k))) ==
          doctest::Approx(0.0));
  }
}

TEST_CASE("1 kHz sine peaks at bin 43") {
  StftConfig cfg;
  AudioClip clip;
  clip.channels.resize(1);
  clip.channels[0].resize(24000);
  for (size_t i = 0; i < clip.channels[0].size(); ++i) {
    clip.channels[0][i] =
        static_cast<float>(std::sin(2.0 * M_PI * 1000.0 * i / 24000.0));
  }
  Spectrogram spec = ComputeStft(clip, cfg);
  size_t frame = 20;  // away from the zero-padded edges
  size_t peak = 0;
  double best = -1.0;
  for (size_t k = 0; k < spec.num_bins; ++k) {
    double mag = std::abs(std::complex<double>(spec.at(frame, 0, k)));
    if (mag > best) {
      best = mag;
      peak = k;
    }
  }
  CHECK(peak == 43);  // round(1000 * 1024 / 24000)
}

TEST_CASE("a 60 second clip yields exactly 3000 frames") {
  StftConfig cfg;
  AudioClip clip = AudioClip::Silence(24000, 1, 1440000);
  Spectrogram spec = ComputeStft(clip, cfg);
  CHECK(spec.num_frames == 3000);
}

TEST_CASE("per-frame Parseval consistency") {
  StftConfig cfg;
  AudioClip clip = NoiseClip(1, 4800, 77);
  Spectrogram spec = ComputeStft(clip, cfg);
  auto window = seld::HannWindow(cfg.window_length);

  size_t frame = 3;
  double time_energy = 0.0;
  for (int n = 0; n < cfg.window_length; ++n) {
    size_t idx = frame * cfg.hop_length + static_cast<size_t>(n);
    if (idx < clip.num_samples()) {
      double v = clip.channels[0][idx] * window[n];
      time_energy += v * v;
    }
  }
  // One-sided spectrum: interior bins count twice.
  double spectral_energy = 0.0;
  for (size_t k = 0; k < spec.num_bins; ++k) {
    double p = std::norm(std::complex<double>(spec.at(frame, 0, k)));
    spectral_energy += (k == 0 || k + 1 == spec.num_bins) ? p : 2.0 * p;
  }
  spectral_energy /= cfg.fft_size;
  CHECK(spectral_energy ==
        doctest::Approx(time_energy).epsilon(1e-6));
}

TEST_CASE("stft is linear") {
  StftConfig cfg;
  AudioClip a = NoiseClip(1, 2400, 1);
  AudioClip b = NoiseClip(1, 2400, 2);
  AudioClip sum = a;
  for (size_t i = 0; i < sum.channels[0].size(); ++i) {
    sum.channels[0][i] += b.channels[0][i];
  }
  Spectrogram sa = ComputeStft(a, cfg);
  Spectrogram sb = ComputeStft(b, cfg);
  Spectrogram ss = ComputeStft(sum, cfg);
  for (size_t i = 0; i < ss.data.size(); ++i) {
    std::complex<double> lhs(ss.data[i]);
    std::complex<double> rhs =
        std::complex<double>(sa.data[i]) + std::complex<double>(sb.data[i]);
    CHECK(std::abs(lhs - rhs) < 1e-4);
  }
}

TEST_CASE("sample-rate mismatch is a config error") {
  StftConfig cfg;
  AudioClip clip = AudioClip::Silence(48000, 1, 480);
  CHECK_THROWS_AS(ComputeStft(clip, cfg), seld::SeldError);
}

TEST_CASE("mel bank shape and coverage") {
  StftConfig cfg;
  MelBank bank(cfg);
  CHECK(bank.num_bands() == 64);
  CHECK(bank.num_bins() == 513);
  for (int m = 0; m < bank.num_bands(); ++m) {
    for (int k = 0; k < bank.num_bins(); ++k) {
      CHECK(bank.weight(m, k) >= 0.0);
    }
  }
  // Every bin strictly inside (0, 12 kHz) falls under at least one triangle;
  // the exact band edges (bin 0 and the Nyquist bin) are zero by construction.
  for (int k = 1; k < 512; ++k) {
    double total = 0.0;
    for (int m = 0; m < bank.num_bands(); ++m) total += bank.weight(m, k);
    CHECK(total > 0.0);
  }
}

TEST_CASE("log-mel of silence floors at log(eps)") {
  StftConfig cfg;
  MelBank bank(cfg);
  Spectrogram spec = ComputeStft(AudioClip::Silence(24000, 2, 4800), cfg);
  Tensor mel = seld::LogMel(spec, bank);
  CHECK(mel.dims == std::vector<size_t>{10, 2, 64});
  for (float v : mel.data) {
    CHECK(v == doctest::Approx(std::log(1e-10)));
  }
}

TEST_CASE("doubling the amplitude shifts log-mel by log 4") {
  StftConfig cfg;
  MelBank bank(cfg);
  AudioClip a = NoiseClip(1, 4800, 5);
  AudioClip b = a;
  for (float &x : b.channels[0]) x *= 2.0f;
  Tensor ma = seld::LogMel(ComputeStft(a, cfg), bank);
  Tensor mb = seld::LogMel(ComputeStft(b, cfg), bank);
  for (size_t i = 0; i < ma.data.size(); ++i) {
    CHECK(mb.data[i] - ma.data[i] == doctest::Approx(std::log(4.0)).epsilon(1e-4));
  }
}

TEST_CASE("single-bin unit power reads out the mel weights") {
  StftConfig cfg;
  MelBank bank(cfg);
  Spectrogram spec;
  spec.num_frames = 1;
  spec.num_channels = 1;
  spec.num_bins = 513;
  spec.data.assign(513, {0.0f, 0.0f});
  const int bin = 100;
  spec.data[bin] = {1.0f, 0.0f};
  Tensor mel = seld::LogMel(spec, bank);
  for (int m = 0; m < 64; ++m) {
    CHECK(mel.data[static_cast<size_t>(m)] ==
          doctest::Approx(std::log(bank.weight(m, bin) + 1e-10)).epsilon(1e-6));
  }
}

TEST_CASE("intensity recovers the plane-wave direction") {
  StftConfig cfg;
  MelBank bank(cfg);
  std::mt19937 rng(31);
  std::uniform_real_distribution<float> dist(-1.0f, 1.0f);
  std::vector<float> mono(6000);
  for (float &x : mono) x = dist(rng);

  Doa doa = Doa::FromDegrees(30, 0);
  Tensor iv = seld::FoaIntensity(ComputeStft(PlaneWave(doa, mono), cfg), bank);
  CHECK(iv.dims == std::vector<size_t>{13, 3, 64});

  // Per-band unit direction on energetic bands of an interior frame.
  size_t frame = 6;
  seld::Vec3 expected = doa.cartesian();
  const size_t bands = iv.dims[2];
  int checked = 0;
  for (size_t m = 0; m < bands; ++m) {
    double x = iv.data[(frame * 3 + 0) * bands + m];
    double y = iv.data[(frame * 3 + 1) * bands + m];
    double z = iv.data[(frame * 3 + 2) * bands + m];
    double norm = std::sqrt(x * x + y * y + z * z);
    if (norm < 0.3) continue;  // skip bands with little signal energy
    CHECK(std::abs(x / norm - expected.x) < 1e-3);
    CHECK(std::abs(y / norm - expected.y) < 1e-3);
    CHECK(std::abs(z / norm - expected.z) < 1e-3);
    ++checked;
  }
  CHECK(checked > 32);
}

TEST_CASE("intensity of a W-only signal is zero") {
  StftConfig cfg;
  MelBank bank(cfg);
  AudioClip clip = NoiseClip(1, 4800, 8);
  clip.channels.resize(4);
  for (int ch = 1; ch < 4; ++ch) {
    clip.channels[ch].assign(clip.channels[0].size(), 0.0f);
  }
  Tensor iv = seld::FoaIntensity(ComputeStft(clip, cfg), bank);
  for (float v : iv.data) CHECK(std::abs(v) < 1e-9);
}

TEST_CASE("intensity at the pole points up") {
  StftConfig cfg;
  MelBank bank(cfg);
  std::mt19937 rng(32);
  std::uniform_real_distribution<float> dist(-1.0f, 1.0f);
  std::vector<float> mono(4800);
  for (float &x : mono) x = dist(rng);
  Tensor iv = seld::FoaIntensity(
      ComputeStft(PlaneWave(Doa::FromDegrees(0, 90), mono), cfg), bank);
  seld::Vec3 dir = RecoveredDirection(iv, 4);
  CHECK(std::abs(dir.x) < 1e-3);
  CHECK(std::abs(dir.y) < 1e-3);
  CHECK(dir.z == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("intensity stays within [-1, 1] for arbitrary input") {
  StftConfig cfg;
  MelBank bank(cfg);
  Tensor iv = seld::FoaIntensity(ComputeStft(NoiseClip(4, 9600, 99), cfg), bank);
  for (float v : iv.data) {
    CHECK(v >= -1.0f);
    CHECK(v <= 1.0f);
  }
}

TEST_CASE("intensity requires four channels") {
  StftConfig cfg;
  MelBank bank(cfg);
  CHECK_THROWS_AS(
      seld::FoaIntensity(ComputeStft(NoiseClip(2, 2400, 1), cfg), bank),
      seld::SeldError);
}

TEST_CASE("gcc-phat finds an integer delay with the oracle's sign") {
  StftConfig cfg;
  AudioClip base = NoiseClip(1, 12000, 55);
  AudioClip clip;
  clip.channels.resize(4);
  clip.channels[0] = base.channels[0];
  // Channel 1 lags channel 0 by 5 samples.
  clip.channels[1].assign(base.channels[0].size(), 0.0f);
  for (size_t i = 5; i < base.channels[0].size(); ++i) {
    clip.channels[1][i] = base.channels[0][i - 5];
  }
  clip.channels[2] = base.channels[0];
  clip.channels[3] = base.channels[0];

  Tensor gcc = seld::GccPhat(ComputeStft(clip, cfg), 64);
  CHECK(gcc.dims == std::vector<size_t>{25, 6, 64});

  auto argmax_lag = [&gcc](size_t frame, size_t pair) {
    const float *row = &gcc.data[(frame * 6 + pair) * 64];
    int best = 0;
    float best_value = row[0];
    for (int j = 1; j < 64; ++j) {
      if (row[j] > best_value) {
        best_value = row[j];
        best = j;
      }
    }
    return best - 32;
  };

  for (size_t frame = 4; frame < 20; ++frame) {
    CHECK(argmax_lag(frame, 0) == 5);   // (0,1): 1 lags 0
    CHECK(argmax_lag(frame, 3) == -5);  // (1,2): 2 leads 1
    CHECK(argmax_lag(frame, 5) == 0);   // (2,3): identical
  }

  // Independent sign oracle on one windowed frame.
  auto window = seld::HannWindow(cfg.window_length);
  std::vector<double> fa(window.size()), fb(window.size());
  size_t start = 6 * cfg.hop_length;
  for (size_t n = 0; n < window.size(); ++n) {
    fa[n] = clip.channels[0][start + n] * window[n];
    fb[n] = clip.channels[1][start + n] * window[n];
  }
  CHECK(seld::testing::DirectCrossCorrelationPeak(fa, fb, 32) == 5);
}

TEST_CASE("gcc-phat of independent noise shows no dominant lag") {
  StftConfig cfg;
  AudioClip clip = NoiseClip(4, 480 * 101 + 480, 123);  // > 100 frames
  Tensor gcc = seld::GccPhat(ComputeStft(clip, cfg), 64);

  // Average over 100 frames, then compare each lag to the spread of all lags.
  std::vector<double> averaged(64, 0.0);
  for (size_t frame = 0; frame < 100; ++frame) {
    const float *row = &gcc.data[(frame * 6 + 0) * 64];
    for (int j = 0; j < 64; ++j) averaged[j] += row[j] / 100.0;
  }
  double mean = 0.0;
  for (double v : averaged) mean += v / 64.0;
  double var = 0.0;
  for (double v : averaged) var += (v - mean) * (v - mean) / 64.0;
  double sd = std::sqrt(var);
  for (double v : averaged) {
    CHECK(std::abs(v - mean) <= 3.0 * sd);
  }
}

TEST_CASE("salsa-lite of identical channels has zero phase features") {
  StftConfig cfg;
  AudioClip base = NoiseClip(1, 4800, 11);
  AudioClip clip;
  clip.channels.assign(4, base.channels[0]);
  Tensor salsa = seld::SalsaLite(ComputeStft(clip, cfg), cfg, seld::SalsaConfig{});
  CHECK(salsa.dims == std::vector<size_t>{10, 7, 382});
  for (size_t t = 0; t < salsa.dims[0]; ++t) {
    for (size_t ch = 4; ch < 7; ++ch) {
      for (size_t k = 0; k < 382; ++k) {
        CHECK(salsa.data[(t * 7 + ch) * 382 + k] == doctest::Approx(0.0));
      }
    }
  }
}

TEST_CASE("salsa-lite phase features are frequency-constant for a pure delay") {
  StftConfig cfg;
  std::mt19937 rng(13);
  std::uniform_real_distribution<float> dist(-1.0f, 1.0f);
  std::vector<float> mono(48000);
  for (float &x : mono) x = dist(rng);

  const double delays[3] = {0.5, -0.7, 0.3};  // samples
  AudioClip clip;
  clip.channels.resize(4);
  clip.channels[0] = mono;
  for (int i = 0; i < 3; ++i) {
    clip.channels[static_cast<size_t>(i) + 1] = FractionalDelay(mono, delays[i]);
  }

  Tensor salsa = seld::SalsaLite(ComputeStft(clip, cfg), cfg, seld::SalsaConfig{});
  const size_t num_frames = salsa.dims[0];
  for (int ch = 0; ch < 3; ++ch) {
    // Average each bin across interior frames, then measure flatness.
    std::vector<double> profile(382, 0.0);
    size_t counted = 0;
    for (size_t t = 2; t + 2 < num_frames; ++t) {
      for (size_t k = 0; k < 382; ++k) {
        profile[k] += salsa.data[(t * 7 + 4 + static_cast<size_t>(ch)) * 382 + k];
      }
      ++counted;
    }
    for (double &v : profile) v /= static_cast<double>(counted);

    double mean = 0.0;
    int bins = 0;
    for (int k = 5; k <= 300; ++k) {
      mean += profile[static_cast<size_t>(k)];
      ++bins;
    }
    mean /= bins;
    double var = 0.0;
    for (int k = 5; k <= 300; ++k) {
      var += (profile[static_cast<size_t>(k)] - mean) *
             (profile[static_cast<size_t>(k)] - mean);
    }
    var /= bins;
    CHECK(std::abs(mean) > 0.0);
    CHECK(std::sqrt(var) / std::abs(mean) < 0.05);

    // The plateau value is the path difference -c * tau.
    double expected = -343.0 * delays[ch] / 24000.0;
    CHECK(mean == doctest::Approx(expected).epsilon(0.05));
  }
}

TEST_CASE("assembled feature stacks have the documented shapes") {
  StftConfig cfg;
  AudioClip clip = NoiseClip(4, 24000, 200);  // 1 s
  clip.sample_rate = 24000;

  Tensor foa = seld::AssembleFeatures(clip, seld::AudioFormat::kFoa,
                                      seld::FeatureKind::kMelIv, cfg);
  CHECK(foa.dims == std::vector<size_t>{50, 7, 64});
  CHECK(foa.meta.kind == "mel_iv");
  CHECK(foa.meta.order == "T,C,B");

  Tensor gcc = seld::AssembleFeatures(clip, seld::AudioFormat::kMic,
                                      seld::FeatureKind::kMelGcc, cfg);
  CHECK(gcc.dims == std::vector<size_t>{50, 10, 64});

  Tensor salsa = seld::AssembleFeatures(clip, seld::AudioFormat::kMic,
                                        seld::FeatureKind::kSalsaLite, cfg);
  CHECK(salsa.dims == std::vector<size_t>{50, 7, 382});

  for (float v : foa.data) CHECK(std::isfinite(v));
  for (float v : gcc.data) CHECK(std::isfinite(v));
  for (float v : salsa.data) CHECK(std::isfinite(v));
}

TEST_CASE("incompatible format/kind combinations are rejected") {
  StftConfig cfg;
  AudioClip clip = NoiseClip(4, 2400, 3);
  CHECK_THROWS_AS(seld::AssembleFeatures(clip, seld::AudioFormat::kMic,
                                         seld::FeatureKind::kMelIv, cfg),
                  seld::SeldError);
  CHECK_THROWS_AS(seld::AssembleFeatures(clip, seld::AudioFormat::kFoa,
                                         seld::FeatureKind::kSalsaLite, cfg),
                  seld::SeldError);
  AudioClip three = NoiseClip(3, 2400, 4);
  CHECK_THROWS_AS(seld::AssembleFeatures(three, seld::AudioFormat::kFoa,
                                         seld::FeatureKind::kMelIv, cfg),
                  seld::SeldError);
}

TEST_SUITE_END();
