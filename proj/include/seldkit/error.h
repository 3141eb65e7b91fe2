// seldkit/error.h

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

#ifndef SELDKIT_ERROR_H_
#define SELDKIT_ERROR_H_

#include <stdexcept>
#include <string>

namespace seld {

// Error taxonomy used across the toolkit. `kParse` and `kValidation` carry
// location/field context in the message; the CLI maps kinds to exit codes
// (input-side kinds -> 2, kInternal -> 1).
enum class ErrorKind {
  kParse,       // malformed input text (carries line number)
  kValidation,  // well-formed but out-of-range / inconsistent data
  kConfig,      // incompatible or invalid configuration
  kIo,          // file system / codec failures
  kCapacity,    // structural limits exceeded (e.g. > N tracks per class)
  kInternal,
};

class SeldError : public std::runtime_error {
 public:
  SeldError(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void ThrowParse(const std::string &msg) {
  throw SeldError(ErrorKind::kParse, msg);
}
[[noreturn]] inline void ThrowValidation(const std::string &msg) {
  throw SeldError(ErrorKind::kValidation, msg);
}
[[noreturn]] inline void ThrowConfig(const std::string &msg) {
  throw SeldError(ErrorKind::kConfig, msg);
}
[[noreturn]] inline void ThrowIo(const std::string &msg) {
  throw SeldError(ErrorKind::kIo, msg);
}
[[noreturn]] inline void ThrowCapacity(const std::string &msg) {
  throw SeldError(ErrorKind::kCapacity, msg);
}

}  // namespace seld

#endif  // SELDKIT_ERROR_H_
