// seldkit/convolve.cc

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

#include "seldkit/convolve.h"

#include <algorithm>
#include <cmath>
#include <complex>

#include "seldkit/error.h"
#include "seldkit/fft.h"

namespace seld {

std::vector<std::vector<double>> FftConvolve(
    const std::vector<double> &signal,
    const std::vector<std::vector<double>> &impulse_responses) {
  for (double x : signal) {
    if (!std::isfinite(x)) ThrowValidation("signal contains non-finite samples");
  }
  size_t ir_len = 0;
  for (const auto &ir : impulse_responses) {
    ir_len = std::max(ir_len, ir.size());
    for (double x : ir) {
      if (!std::isfinite(x)) {
        ThrowValidation("impulse response contains non-finite samples");
      }
    }
  }

  std::vector<std::vector<double>> outputs(impulse_responses.size());
  if (signal.empty() || ir_len == 0) {
    for (size_t ch = 0; ch < outputs.size(); ++ch) {
      size_t n = signal.size() + impulse_responses[ch].size();
      outputs[ch].assign(n == 0 ? 0 : n - 1, 0.0);
    }
    return outputs;
  }

  // Block size: power of two holding the IR plus at least as many input
  // samples (min 1024).
  const size_t fft_size = NextPowerOfTwo(std::max<size_t>(2 * ir_len, 1024));
  const size_t block = fft_size - ir_len + 1;
  FftPlan fft(fft_size);

  std::vector<std::vector<std::complex<double>>> ir_spectra;
  ir_spectra.reserve(impulse_responses.size());
  std::vector<std::complex<double>> buffer(fft_size);
  for (const auto &ir : impulse_responses) {
    std::fill(buffer.begin(), buffer.end(), std::complex<double>{});
    for (size_t i = 0; i < ir.size(); ++i) buffer[i] = ir[i];
    fft.Forward(buffer.data(), buffer.data());
    ir_spectra.push_back(buffer);
  }

  for (size_t ch = 0; ch < outputs.size(); ++ch) {
    outputs[ch].assign(signal.size() + impulse_responses[ch].size() - 1, 0.0);
  }

  std::vector<std::complex<double>> block_spectrum(fft_size);
  std::vector<std::complex<double>> product(fft_size);
  for (size_t start = 0; start < signal.size(); start += block) {
    const size_t count = std::min(block, signal.size() - start);
    std::fill(block_spectrum.begin(), block_spectrum.end(),
              std::complex<double>{});
    for (size_t i = 0; i < count; ++i) block_spectrum[i] = signal[start + i];
    fft.Forward(block_spectrum.data(), block_spectrum.data());

    for (size_t ch = 0; ch < outputs.size(); ++ch) {
      if (impulse_responses[ch].empty()) continue;
      for (size_t k = 0; k < fft_size; ++k) {
        product[k] = block_spectrum[k] * ir_spectra[ch][k];
      }
      fft.Inverse(product.data(), product.data());
      std::vector<double> &out = outputs[ch];
      const size_t tail =
          std::min(count + impulse_responses[ch].size() - 1, fft_size);
      for (size_t i = 0; i < tail && start + i < out.size(); ++i) {
        out[start + i] += product[i].real();
      }
    }
  }
  return outputs;
}

std::vector<double> FftConvolve(const std::vector<double> &signal,
                                const std::vector<double> &impulse_response) {
  return FftConvolve(signal,
                     std::vector<std::vector<double>>{impulse_response})[0];
}

}  // namespace seld
