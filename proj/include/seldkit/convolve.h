// seldkit/convolve.h

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

#ifndef SELDKIT_CONVOLVE_H_
#define SELDKIT_CONVOLVE_H_

#include <vector>

namespace seld {

// Overlap-add FFT convolution of a mono signal with one impulse response per
// output channel. Each output holds signal_len + ir_len - 1 samples and
// matches direct time-domain convolution to within 1e-6 relative error.
std::vector<std::vector<double>> FftConvolve(
    const std::vector<double> &signal,
    const std::vector<std::vector<double>> &impulse_responses);

std::vector<double> FftConvolve(const std::vector<double> &signal,
                                const std::vector<double> &impulse_response);

}  // namespace seld

#endif  // SELDKIT_CONVOLVE_H_
