// seldkit/maccdoa.h

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

#ifndef SELDKIT_MACCDOA_H_
#define SELDKIT_MACCDOA_H_

#include <optional>

#include "seldkit/annotations.h"
#include "seldkit/tensor.h"

namespace seld {

// Track-based activity-coupled Cartesian DOA output representation: per
// frame, N track slots per class hold a 3-vector whose direction is the DOA
// and whose magnitude gates activity.
struct MaccdoaConfig {
  int max_tracks = 3;  // N
  int num_classes = 13;
  double activity_threshold = 0.5;
  std::optional<double> merge_threshold_deg;  // optional duplicate merge

  void Validate() const;
};

// Encodes frame labels into a (T, N, C, 3) tensor (kind "maccdoa", order
// "T,N,C,3"). Active instances fill track slots in ascending track_idx order
// with their unit DOA vector; inactive slots are zero. More than N
// simultaneous same-class instances raise kCapacity naming frame and class.
// num_frames < 0 sizes the tensor from the labels (max frame + 1).
Tensor MaccdoaEncode(const FrameEvents &frames, const MaccdoaConfig &cfg,
                     int num_frames = -1);

// Thresholds slot-vector norms (strictly above activity_threshold) and emits
// one event per active slot with class = slot class, track = slot index, DOA =
// vector direction. With merge_threshold_deg set, same-class detections
// within that angle keep only the largest-norm member. NaN values raise
// kValidation.
FrameEvents MaccdoaDecode(const Tensor &tensor, const MaccdoaConfig &cfg);

}  // namespace seld

#endif  // SELDKIT_MACCDOA_H_
