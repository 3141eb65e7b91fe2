// seldkit/class_set.cc

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

#include "seldkit/class_set.h"

#include <string>

#include "seldkit/error.h"

namespace seld {

ClassSet::ClassSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) ThrowConfig("class set must contain at least one label");
}

const std::string &ClassSet::label(int class_idx) const {
  if (class_idx < 0 || class_idx >= size()) {
    ThrowValidation("class index " + std::to_string(class_idx) +
                    " outside [0, " + std::to_string(size()) + ")");
  }
  return labels_[static_cast<size_t>(class_idx)];
}

const std::vector<std::string> &ClassSet::DefaultLabels() {
  static const std::vector<std::string> kLabels = {
      "female speech/woman speaking",
      "male speech/man speaking",
      "clapping",
      "telephone",
      "laughter",
      "domestic sounds",
      "walk/footsteps",
      "door open or close",
      "music",
      "musical instrument",
      "water tap/faucet",
      "bell",
      "knock",
  };
  return kLabels;
}

}  // namespace seld
