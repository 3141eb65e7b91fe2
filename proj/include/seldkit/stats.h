// seldkit/stats.h

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

#ifndef SELDKIT_STATS_H_
#define SELDKIT_STATS_H_

#include <string>
#include <vector>

#include "seldkit/annotations.h"
#include "seldkit/class_set.h"

namespace seld {

// Activity/polyphony tallies for one scope (one class, or the global row
// where polyphony counts instances across classes).
struct ActivityRow {
  long total_frames = 0;
  long active_frames = 0;
  long instance_frame_sum = 0;  // sum of polyphony over active frames
  int max_polyphony = 0;
  std::vector<long> frames_at_polyphony;  // index 0 <-> polyphony 1

  double coverage_percent() const {
    return total_frames > 0 ? 100.0 * active_frames / total_frames : 0.0;
  }
  double mean_polyphony() const {
    return active_frames > 0
               ? static_cast<double>(instance_frame_sum) / active_frames
               : 0.0;
  }
  // Share of active frames at the given polyphony level (1-based), percent.
  double polyphony_share_percent(int level) const;
};

struct ActivityStats {
  ActivityRow global;
  std::vector<ActivityRow> per_class;
};

struct AnnotatedFile {
  FrameEvents events;
  int total_frames = -1;  // -1: infer as max frame + 1
};

// Tallies coverage and polyphony over a set of annotation files. The frame
// denominator is the sum of file lengths (explicit when given, otherwise
// max frame + 1 per file).
ActivityStats ComputeStats(const std::vector<AnnotatedFile> &files,
                           int num_classes);

std::string StatsToJson(const ActivityStats &stats, const ClassSet &classes);
std::string StatsToTable(const ActivityStats &stats, const ClassSet &classes);

}  // namespace seld

#endif  // SELDKIT_STATS_H_
