// seldkit/annotations.h

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

#ifndef SELDKIT_ANNOTATIONS_H_
#define SELDKIT_ANNOTATIONS_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "seldkit/geometry.h"

namespace seld {

// One row of a metadata file: `frame,class,track,azimuth,elevation`, all
// integers, frame in 100 ms units. (frame, class, track) is unique per file.
struct EventRecord {
  int frame = 0;
  int class_idx = 0;
  int track_idx = 0;
  int azimuth = 0;    // degrees in [-180, 180)
  int elevation = 0;  // degrees in [-90, 90]
};

struct FrameEvent {
  int class_idx = 0;
  int track_idx = 0;
  Doa doa;
};

// Canonical in-memory view of a label file: frame index -> events, each list
// sorted by (class_idx, track_idx).
struct FrameEvents {
  std::map<int, std::vector<FrameEvent>> frames;

  // Clip length implied by the annotations (max frame + 1), 0 when empty.
  int num_frames() const {
    return frames.empty() ? 0 : frames.rbegin()->first + 1;
  }
};

// Parses DCASE-layout metadata CSV: 5 integer fields per row, no header.
// Malformed rows raise kParse with the 1-based line number; out-of-range
// fields raise kValidation naming the field. When num_classes >= 0 the class
// index is additionally checked against it.
std::vector<EventRecord> ParseMetadataCsv(std::string_view text,
                                          int num_classes = -1);

// Emits rows sorted by (frame, class, track), newline-terminated.
std::string WriteMetadataCsv(std::vector<EventRecord> records);

// Groups records by frame; duplicate (frame, class, track) keys raise
// kValidation.
FrameEvents EventsToFrames(const std::vector<EventRecord> &records);

// Inverse of EventsToFrames: real-valued DOAs are rounded half-away-from-zero
// to integer degrees, azimuth 180 wraps to -180.
std::vector<EventRecord> FramesToEvents(const FrameEvents &frames);

// Rounding used when writing label files.
int RoundAngleDeg(double deg);

}  // namespace seld

#endif  // SELDKIT_ANNOTATIONS_H_
