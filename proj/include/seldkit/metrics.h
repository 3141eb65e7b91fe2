// seldkit/metrics.h

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

#ifndef SELDKIT_METRICS_H_
#define SELDKIT_METRICS_H_

#include <string>
#include <utility>
#include <vector>

#include "seldkit/annotations.h"
#include "seldkit/class_set.h"
#include "seldkit/geometry.h"

namespace seld {

enum class Averaging { kMacro, kMicro, kBoth };

struct MetricsConfig {
  double spatial_threshold_deg = 20.0;
  double segment_length_s = 1.0;
  double frame_resolution_s = 0.1;
  Averaging averaging = Averaging::kBoth;
  int num_classes = 13;

  // Throws kConfig unless threshold > 0 and the segment length is an integer
  // multiple of the frame resolution.
  void Validate() const;
  int frames_per_segment() const;
};

// Joint detection/localization tallies for one (segment, class) cell.
// Invariants: fn = max(0, reference - predicted), detection_fp =
// max(0, predicted - reference), unthresholded_tp = min(predicted, reference),
// spatial_fp <= unthresholded_tp, thresholded_tp = unthresholded_tp -
// spatial_fp.
struct SegmentCounts {
  int segment = 0;
  int class_idx = 0;
  int predicted = 0;
  int reference = 0;
  int unthresholded_tp = 0;
  int fn = 0;
  int detection_fp = 0;
  int spatial_fp = 0;
  int thresholded_tp = 0;
  double angular_error_sum_deg = 0.0;  // over matched pairs
};

// One event instance's DOA trajectory inside a segment: (frame offset, DOA)
// pairs, frame offsets ascending.
struct SegmentInstance {
  std::vector<std::pair<int, Doa>> frames;
};

// Counts one (segment, class) cell: instances are matched with the Hungarian
// algorithm on mean angular distance over shared active frames (pairs with no
// shared frame cost 181 so the assignment stays total), then split at the
// spatial threshold (error > threshold -> spatial FP).
SegmentCounts CountSegment(const std::vector<SegmentInstance> &predicted,
                           const std::vector<SegmentInstance> &reference,
                           int class_idx, double threshold_deg);

// Order-independent accumulation of counts across segments and files; merge
// is associative and commutative.
struct EvalTotals {
  int num_classes = 0;
  std::vector<long> thresholded_tp;
  std::vector<long> detection_fp;
  std::vector<long> spatial_fp;
  std::vector<long> fn;
  std::vector<long> unthresholded_tp;
  std::vector<double> angular_error_sum_deg;
  std::vector<char> any_activity;  // any prediction or reference seen
  long substitutions = 0;
  long deletions = 0;
  long insertions = 0;
  long total_references = 0;

  explicit EvalTotals(int classes = 0) { Resize(classes); }
  void Resize(int classes);
  void Merge(const EvalTotals &other);
  long fp(int class_idx) const {
    return detection_fp[class_idx] + spatial_fp[class_idx];
  }
};

struct ClassMetrics {
  int class_idx = 0;
  bool active = false;  // had any prediction or reference
  double f = 0.0;
  double le_deg = 0.0;
  bool le_defined = false;  // false when the class had no matched pairs
  double lr = 0.0;
  bool lr_defined = false;  // false when the class had no references
};

struct MetricsReport {
  MetricsConfig config;
  double er = 0.0;
  double f_macro = 1.0;
  double f_micro = 1.0;
  double le_cd_deg = 0.0;
  bool le_cd_defined = false;
  double lr_cd = 1.0;
  std::vector<ClassMetrics> classes;
};

// Accumulates one prediction/reference file pair. The evaluation spans the
// longer of the two files; frames absent from either side are silence. Class
// indices outside [0, cfg.num_classes) raise kConfig.
EvalTotals AccumulateFilePair(const FrameEvents &predicted,
                              const FrameEvents &reference,
                              const MetricsConfig &cfg);

// Turns accumulated totals into the final metrics. Classes with no activity
// at all are excluded from every macro mean; LE_CD carries an undefined flag
// when no class had matched pairs; with no references anywhere LR_CD is 1.
MetricsReport Finalize(const EvalTotals &totals, const MetricsConfig &cfg);

// AccumulateFilePair + Finalize for a single pair.
MetricsReport Evaluate(const FrameEvents &predicted, const FrameEvents &reference,
                       const MetricsConfig &cfg);

// Report renderers: a versioned JSON document and an aligned text table.
std::string ReportToJson(const MetricsReport &report, const ClassSet &classes);
std::string ReportToTable(const MetricsReport &report, const ClassSet &classes);

}  // namespace seld

#endif  // SELDKIT_METRICS_H_
