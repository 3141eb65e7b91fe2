// seldkit/fft.cc

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

#include "seldkit/fft.h"

#include <algorithm>
#include <cstring>
#include <mutex>

#include <fftw3.h>

#include "seldkit/error.h"

namespace seld {

namespace {

std::mutex &PlannerMutex() {
  static std::mutex mutex;
  return mutex;
}

}  // namespace

FftPlan::FftPlan(size_t size) : size_(size) {
  if (size == 0) ThrowConfig("FFT size must be positive");
  std::lock_guard<std::mutex> lock(PlannerMutex());
  work_in_ = reinterpret_cast<std::complex<double> *>(
      fftw_malloc(sizeof(fftw_complex) * size));
  work_out_ = reinterpret_cast<std::complex<double> *>(
      fftw_malloc(sizeof(fftw_complex) * size));
  if (work_in_ == nullptr || work_out_ == nullptr) {
    throw SeldError(ErrorKind::kInternal, "fftw_malloc failed");
  }
  forward_plan_ = fftw_plan_dft_1d(
      static_cast<int>(size), reinterpret_cast<fftw_complex *>(work_in_),
      reinterpret_cast<fftw_complex *>(work_out_), FFTW_FORWARD, FFTW_ESTIMATE);
  inverse_plan_ = fftw_plan_dft_1d(
      static_cast<int>(size), reinterpret_cast<fftw_complex *>(work_in_),
      reinterpret_cast<fftw_complex *>(work_out_), FFTW_BACKWARD, FFTW_ESTIMATE);
}

FftPlan::~FftPlan() {
  std::lock_guard<std::mutex> lock(PlannerMutex());
  fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
  fftw_destroy_plan(static_cast<fftw_plan>(inverse_plan_));
  fftw_free(work_in_);
  fftw_free(work_out_);
}

void FftPlan::Forward(const std::complex<double> *in, std::complex<double> *out) {
  std::memcpy(work_in_, in, sizeof(std::complex<double>) * size_);
  fftw_execute(static_cast<fftw_plan>(forward_plan_));
  std::memcpy(out, work_out_, sizeof(std::complex<double>) * size_);
}

void FftPlan::Inverse(const std::complex<double> *in, std::complex<double> *out) {
  std::memcpy(work_in_, in, sizeof(std::complex<double>) * size_);
  fftw_execute(static_cast<fftw_plan>(inverse_plan_));
  const double scale = 1.0 / static_cast<double>(size_);
  for (size_t i = 0; i < size_; ++i) out[i] = work_out_[i] * scale;
}

size_t NextPowerOfTwo(size_t n) {
  size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace seld
