// seldkit/metrics.cc

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

#include "seldkit/metrics.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "seldkit/assignment.h"
#include "seldkit/error.h"

namespace seld {

namespace {

// Finite stand-in cost for instance pairs with no common active frame; above
// any real angular distance so such pairs lose every tie.
constexpr double kNoOverlapCost = 181.0;

// Mean angular distance over frames where both instances are active.
double PairCost(const SegmentInstance &a, const SegmentInstance &b) {
  double sum = 0.0;
  int shared = 0;
  size_t ia = 0, ib = 0;
  while (ia < a.frames.size() && ib < b.frames.size()) {
    int fa = a.frames[ia].first;
    int fb = b.frames[ib].first;
    if (fa == fb) {
      sum += AngularDistanceDeg(a.frames[ia].second, b.frames[ib].second);
      ++shared;
      ++ia;
      ++ib;
    } else if (fa < fb) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return shared == 0 ? kNoOverlapCost : sum / shared;
}

// Per-segment instance trajectories grouped by class.
std::map<int, std::vector<SegmentInstance>> SegmentInstancesByClass(
    const FrameEvents &events, int first_frame, int frames_per_segment) {
  std::map<std::pair<int, int>, SegmentInstance> by_key;  // (class, track)
  for (int offset = 0; offset < frames_per_segment; ++offset) {
    auto it = events.frames.find(first_frame + offset);
    if (it == events.frames.end()) continue;
    for (const FrameEvent &ev : it->second) {
      by_key[{ev.class_idx, ev.track_idx}].frames.emplace_back(offset, ev.doa);
    }
  }
  std::map<int, std::vector<SegmentInstance>> by_class;
  for (auto &[key, instance] : by_key) {
    by_class[key.first].push_back(std::move(instance));
  }
  return by_class;
}

void ValidateClassIndices(const FrameEvents &events, int num_classes,
                          const char *side) {
  for (const auto &[frame, list] : events.frames) {
    for (const FrameEvent &ev : list) {
      if (ev.class_idx < 0 || ev.class_idx >= num_classes) {
        ThrowConfig(std::string(side) + " labels use class " +
                    std::to_string(ev.class_idx) + " but the class set has " +
                    std::to_string(num_classes) + " classes");
      }
    }
  }
}

}  // namespace

void MetricsConfig::Validate() const {
  if (!(spatial_threshold_deg > 0.0)) {
    ThrowConfig("spatial threshold must be positive");
  }
  if (!(segment_length_s > 0.0) || !(frame_resolution_s > 0.0)) {
    ThrowConfig("segment length and frame resolution must be positive");
  }
  double ratio = segment_length_s / frame_resolution_s;
  if (std::abs(ratio - std::round(ratio)) > 1e-9 || std::round(ratio) < 1.0) {
    ThrowConfig("segment length must be an integer multiple of the frame resolution");
  }
  if (num_classes < 1) ThrowConfig("need at least one class");
}

int MetricsConfig::frames_per_segment() const {
  return static_cast<int>(std::round(segment_length_s / frame_resolution_s));
}

SegmentCounts CountSegment(const std::vector<SegmentInstance> &predicted,
                           const std::vector<SegmentInstance> &reference,
                           int class_idx, double threshold_deg) {
  SegmentCounts counts;
  counts.class_idx = class_idx;
  counts.predicted = static_cast<int>(predicted.size());
  counts.reference = static_cast<int>(reference.size());
  counts.unthresholded_tp = std::min(counts.predicted, counts.reference);
  counts.fn = std::max(0, counts.reference - counts.predicted);
  counts.detection_fp = std::max(0, counts.predicted - counts.reference);

  if (counts.unthresholded_tp > 0) {
    std::vector<std::vector<double>> cost(
        predicted.size(), std::vector<double>(reference.size()));
    for (size_t p = 0; p < predicted.size(); ++p) {
      for (size_t r = 0; r < reference.size(); ++r) {
        cost[p][r] = PairCost(predicted[p], reference[r]);
      }
    }
    for (const auto &[p, r] : Hungarian(cost)) {
      double theta = cost[p][r];
      if (theta > threshold_deg) {
        ++counts.spatial_fp;
      }
      // The no-overlap sentinel exceeds any real angle; clamp what goes into
      // the localization-error sum to the true maximum.
      counts.angular_error_sum_deg += std::min(theta, 180.0);
    }
  }
  counts.thresholded_tp = counts.unthresholded_tp - counts.spatial_fp;
  return counts;
}

void EvalTotals::Resize(int classes) {
  num_classes = classes;
  thresholded_tp.assign(classes, 0);
  detection_fp.assign(classes, 0);
  spatial_fp.assign(classes, 0);
  fn.assign(classes, 0);
  unthresholded_tp.assign(classes, 0);
  angular_error_sum_deg.assign(classes, 0.0);
  any_activity.assign(classes, 0);
}

void EvalTotals::Merge(const EvalTotals &other) {
  if (other.num_classes != num_classes) {
    ThrowConfig("cannot merge totals with different class counts");
  }
  for (int c = 0; c < num_classes; ++c) {
    thresholded_tp[c] += other.thresholded_tp[c];
    detection_fp[c] += other.detection_fp[c];
    spatial_fp[c] += other.spatial_fp[c];
    fn[c] += other.fn[c];
    unthresholded_tp[c] += other.unthresholded_tp[c];
    angular_error_sum_deg[c] += other.angular_error_sum_deg[c];
    any_activity[c] |= other.any_activity[c];
  }
  substitutions += other.substitutions;
  deletions += other.deletions;
  insertions += other.insertions;
  total_references += other.total_references;
}

EvalTotals AccumulateFilePair(const FrameEvents &predicted,
                              const FrameEvents &reference,
                              const MetricsConfig &cfg) {
  cfg.Validate();
  ValidateClassIndices(predicted, cfg.num_classes, "prediction");
  ValidateClassIndices(reference, cfg.num_classes, "reference");

  EvalTotals totals(cfg.num_classes);
  const int fps = cfg.frames_per_segment();
  const int total_frames = std::max(predicted.num_frames(), reference.num_frames());
  const int num_segments = (total_frames + fps - 1) / fps;

  for (int seg = 0; seg < num_segments; ++seg) {
    auto pred_by_class = SegmentInstancesByClass(predicted, seg * fps, fps);
    auto ref_by_class = SegmentInstancesByClass(reference, seg * fps, fps);

    long seg_fn = 0, seg_fp = 0, seg_refs = 0;
    static const std::vector<SegmentInstance> kNone;
    for (int c = 0; c < cfg.num_classes; ++c) {
      auto pit = pred_by_class.find(c);
      auto rit = ref_by_class.find(c);
      const auto &pred_list = pit == pred_by_class.end() ? kNone : pit->second;
      const auto &ref_list = rit == ref_by_class.end() ? kNone : rit->second;
      if (pred_list.empty() && ref_list.empty()) continue;

      SegmentCounts counts =
          CountSegment(pred_list, ref_list, c, cfg.spatial_threshold_deg);
      counts.segment = seg;

      totals.any_activity[c] = 1;
      totals.thresholded_tp[c] += counts.thresholded_tp;
      totals.detection_fp[c] += counts.detection_fp;
      totals.spatial_fp[c] += counts.spatial_fp;
      totals.fn[c] += counts.fn;
      totals.unthresholded_tp[c] += counts.unthresholded_tp;
      totals.angular_error_sum_deg[c] += counts.angular_error_sum_deg;

      seg_fn += counts.fn;
      seg_fp += counts.detection_fp + counts.spatial_fp;
      seg_refs += counts.reference;
    }
    // Segment-level S/D/I decomposition over class-summed counts.
    long s = std::min(seg_fn, seg_fp);
    totals.substitutions += s;
    totals.deletions += seg_fn - s;
    totals.insertions += seg_fp - s;
    totals.total_references += seg_refs;
  }
  return totals;
}

MetricsReport Finalize(const EvalTotals &totals, const MetricsConfig &cfg) {
  cfg.Validate();
  if (totals.num_classes != cfg.num_classes) {
    ThrowConfig("totals class count does not match the configuration");
  }
  MetricsReport report;
  report.config = cfg;

  report.er = static_cast<double>(totals.substitutions + totals.deletions +
                                  totals.insertions) /
              static_cast<double>(std::max(1L, totals.total_references));

  double f_sum = 0.0;
  int f_count = 0;
  double le_sum = 0.0;
  int le_count = 0;
  double lr_sum = 0.0;
  int lr_count = 0;
  long tp_all = 0, fp_all = 0, fn_all = 0;

  for (int c = 0; c < cfg.num_classes; ++c) {
    ClassMetrics cm;
    cm.class_idx = c;
    cm.active = totals.any_activity[c] != 0;
    if (cm.active) {
      long tp = totals.thresholded_tp[c];
      long fp = totals.fp(c);
      long fn = totals.fn[c];
      cm.f = static_cast<double>(2 * tp) / static_cast<double>(2 * tp + fp + fn);
      f_sum += cm.f;
      ++f_count;
      tp_all += tp;
      fp_all += fp;
      fn_all += fn;

      if (totals.unthresholded_tp[c] > 0) {
        cm.le_deg = totals.angular_error_sum_deg[c] /
                    static_cast<double>(totals.unthresholded_tp[c]);
        cm.le_defined = true;
        le_sum += cm.le_deg;
        ++le_count;
      }
      long refs = totals.unthresholded_tp[c] + fn;
      if (refs > 0) {
        cm.lr = static_cast<double>(totals.unthresholded_tp[c]) /
                static_cast<double>(refs);
        cm.lr_defined = true;
        lr_sum += cm.lr;
        ++lr_count;
      }
    }
    report.classes.push_back(cm);
  }

  report.f_macro = f_count > 0 ? f_sum / f_count : 1.0;
  long micro_denominator = 2 * tp_all + fp_all + fn_all;
  report.f_micro = micro_denominator > 0
                       ? static_cast<double>(2 * tp_all) /
                             static_cast<double>(micro_denominator)
                       : 1.0;
  report.le_cd_defined = le_count > 0;
  report.le_cd_deg = le_count > 0 ? le_sum / le_count : 0.0;
  report.lr_cd = lr_count > 0 ? lr_sum / lr_count : 1.0;
  return report;
}

MetricsReport Evaluate(const FrameEvents &predicted, const FrameEvents &reference,
                       const MetricsConfig &cfg) {
  return Finalize(AccumulateFilePair(predicted, reference, cfg), cfg);
}

std::string ReportToJson(const MetricsReport &report, const ClassSet &classes) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["config"] = {
      {"spatial_threshold_deg", report.config.spatial_threshold_deg},
      {"segment_length_s", report.config.segment_length_s},
      {"frame_resolution_s", report.config.frame_resolution_s},
      {"num_classes", report.config.num_classes},
      {"averaging", report.config.averaging == Averaging::kMacro  ? "macro"
                    : report.config.averaging == Averaging::kMicro ? "micro"
                                                                   : "both"},
  };
  j["er"] = report.er;
  j["f_macro"] = report.f_macro;
  j["f_micro"] = report.f_micro;
  if (report.le_cd_defined) {
    j["le_cd_deg"] = report.le_cd_deg;
  } else {
    j["le_cd_deg"] = nullptr;
  }
  j["lr_cd"] = report.lr_cd;
  j["classes"] = nlohmann::json::array();
  for (const ClassMetrics &cm : report.classes) {
    nlohmann::json jc;
    jc["class"] = cm.class_idx;
    jc["label"] = cm.class_idx < classes.size() ? classes.label(cm.class_idx)
                                                : std::string("?");
    jc["active"] = cm.active;
    if (cm.active) {
      jc["f"] = cm.f;
      jc["le_deg"] = cm.le_defined ? nlohmann::json(cm.le_deg) : nullptr;
      jc["lr"] = cm.lr_defined ? nlohmann::json(cm.lr) : nullptr;
    }
    j["classes"].push_back(jc);
  }
  return j.dump(2);
}

std::string ReportToTable(const MetricsReport &report, const ClassSet &classes) {
  std::ostringstream os;
  char line[160];
  bool macro = report.config.averaging != Averaging::kMicro;
  bool micro = report.config.averaging != Averaging::kMacro;

  os << "overall:\n";
  std::snprintf(line, sizeof(line), "  ER_%.0f: %.2f", report.config.spatial_threshold_deg,
                report.er);
  os << line << "\n";
  if (macro) {
    std::snprintf(line, sizeof(line), "  F_%.0f (macro): %.1f%%",
                  report.config.spatial_threshold_deg, 100.0 * report.f_macro);
    os << line << "\n";
  }
  if (micro) {
    std::snprintf(line, sizeof(line), "  F_%.0f (micro): %.1f%%",
                  report.config.spatial_threshold_deg, 100.0 * report.f_micro);
    os << line << "\n";
  }
  if (report.le_cd_defined) {
    std::snprintf(line, sizeof(line), "  LE_CD: %.1f deg", report.le_cd_deg);
  } else {
    std::snprintf(line, sizeof(line), "  LE_CD: undefined (no matches)");
  }
  os << line << "\n";
  std::snprintf(line, sizeof(line), "  LR_CD: %.1f%%", 100.0 * report.lr_cd);
  os << line << "\n";

  os << "per class:\n";
  std::snprintf(line, sizeof(line), "  %-32s %8s %10s %8s", "class", "F", "LE",
                "LR");
  os << line << "\n";
  for (const ClassMetrics &cm : report.classes) {
    std::string label = cm.class_idx < classes.size()
                            ? classes.label(cm.class_idx)
                            : "class " + std::to_string(cm.class_idx);
    if (!cm.active) {
      std::snprintf(line, sizeof(line), "  %-32s %8s %10s %8s", label.c_str(),
                    "-", "-", "-");
      os << line << "\n";
      continue;
    }
    char f_buf[16], le_buf[16], lr_buf[16];
    std::snprintf(f_buf, sizeof(f_buf), "%.1f%%", 100.0 * cm.f);
    if (cm.le_defined) {
      std::snprintf(le_buf, sizeof(le_buf), "%.1f deg", cm.le_deg);
    } else {
      std::snprintf(le_buf, sizeof(le_buf), "-");
    }
    if (cm.lr_defined) {
      std::snprintf(lr_buf, sizeof(lr_buf), "%.1f%%", 100.0 * cm.lr);
    } else {
      std::snprintf(lr_buf, sizeof(lr_buf), "-");
    }
    std::snprintf(line, sizeof(line), "  %-32s %8s %10s %8s", label.c_str(),
                  f_buf, le_buf, lr_buf);
    os << line << "\n";
  }
  return os.str();
}

}  // namespace seld
