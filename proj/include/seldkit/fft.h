// seldkit/fft.h

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

#ifndef SELDKIT_FFT_H_
#define SELDKIT_FFT_H_

#include <complex>
#include <cstddef>
#include <vector>

namespace seld {

// Complex-to-complex FFT of a fixed size, backed by FFTW (double precision).
// Plan creation is serialized internally (FFTW planning is not thread-safe);
// each worker thread should own its plan. Transforms are unnormalized in the
// forward direction; Inverse applies the 1/size factor.
class FftPlan {
 public:
  explicit FftPlan(size_t size);
  ~FftPlan();

  FftPlan(const FftPlan &) = delete;
  FftPlan &operator=(const FftPlan &) = delete;

  size_t size() const { return size_; }

  // In/out buffers must hold size() elements; in-place (out == in) is fine.
  void Forward(const std::complex<double> *in, std::complex<double> *out);
  void Inverse(const std::complex<double> *in, std::complex<double> *out);

 private:
  size_t size_;
  void *forward_plan_;
  void *inverse_plan_;
  std::complex<double> *work_in_;
  std::complex<double> *work_out_;
};

size_t NextPowerOfTwo(size_t n);

}  // namespace seld

#endif  // SELDKIT_FFT_H_
