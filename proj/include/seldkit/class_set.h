// seldkit/class_set.h

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

#ifndef SELDKIT_CLASS_SET_H_
#define SELDKIT_CLASS_SET_H_

#include <string>
#include <vector>

namespace seld {

// Ordered target-class taxonomy. The default is the fixed 13-class set used
// by the annotation format; a custom ordered list is accepted for other label
// vocabularies.
class ClassSet {
 public:
  ClassSet() : labels_(DefaultLabels()) {}
  explicit ClassSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string &label(int class_idx) const;
  const std::vector<std::string> &labels() const { return labels_; }

  static const std::vector<std::string> &DefaultLabels();

 private:
  std::vector<std::string> labels_;
};

}  // namespace seld

#endif  // SELDKIT_CLASS_SET_H_
