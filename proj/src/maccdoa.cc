// seldkit/maccdoa.cc

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

#include "seldkit/maccdoa.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "seldkit/error.h"

namespace seld {

namespace {

size_t SlotOffset(const Tensor &t, size_t frame, size_t track, size_t cls) {
  return ((frame * t.dims[1] + track) * t.dims[2] + cls) * 3;
}

}  // namespace

void MaccdoaConfig::Validate() const {
  if (max_tracks < 1) ThrowConfig("max_tracks must be >= 1");
  if (num_classes < 1) ThrowConfig("num_classes must be >= 1");
  if (!(activity_threshold > 0.0 && activity_threshold < 1.0)) {
    ThrowConfig("activity threshold must lie in (0, 1)");
  }
  if (merge_threshold_deg && !(*merge_threshold_deg > 0.0)) {
    ThrowConfig("merge threshold must be positive");
  }
}

Tensor MaccdoaEncode(const FrameEvents &frames, const MaccdoaConfig &cfg,
                     int num_frames) {
  cfg.Validate();
  int frame_count = num_frames >= 0 ? num_frames : frames.num_frames();
  if (!frames.frames.empty() && frames.num_frames() > frame_count) {
    ThrowValidation("labels extend past the requested frame count");
  }

  Tensor tensor;
  tensor.dims = {static_cast<size_t>(frame_count),
                 static_cast<size_t>(cfg.max_tracks),
                 static_cast<size_t>(cfg.num_classes), 3};
  tensor.data.assign(tensor.element_count(), 0.0f);
  tensor.meta.kind = "maccdoa";
  tensor.meta.order = "T,N,C,3";
  tensor.meta.extra["max_tracks"] = std::to_string(cfg.max_tracks);
  tensor.meta.extra["num_classes"] = std::to_string(cfg.num_classes);
  tensor.meta.extra["activity_threshold"] = std::to_string(cfg.activity_threshold);
  tensor.meta.extra["label_hop_s"] = "0.1";

  for (const auto &[frame, frame_events] : frames.frames) {
    // Slot = rank within the class by ascending track index.
    std::vector<FrameEvent> events = frame_events;
    std::sort(events.begin(), events.end(),
              [](const FrameEvent &a, const FrameEvent &b) {
                return std::make_pair(a.class_idx, a.track_idx) <
                       std::make_pair(b.class_idx, b.track_idx);
              });
    int slot = 0;
    int previous_class = -1;
    for (const FrameEvent &ev : events) {
      if (ev.class_idx < 0 || ev.class_idx >= cfg.num_classes) {
        ThrowValidation("class " + std::to_string(ev.class_idx) +
                        " outside the configured class set");
      }
      slot = ev.class_idx == previous_class ? slot + 1 : 0;
      previous_class = ev.class_idx;
      if (slot >= cfg.max_tracks) {
        ThrowCapacity("frame " + std::to_string(frame) + ", class " +
                      std::to_string(ev.class_idx) + ": more than " +
                      std::to_string(cfg.max_tracks) +
                      " simultaneous instances");
      }
      Vec3 v = ev.doa.cartesian();
      size_t off = SlotOffset(tensor, static_cast<size_t>(frame),
                              static_cast<size_t>(slot),
                              static_cast<size_t>(ev.class_idx));
      tensor.data[off + 0] = static_cast<float>(v.x);
      tensor.data[off + 1] = static_cast<float>(v.y);
      tensor.data[off + 2] = static_cast<float>(v.z);
    }
  }
  return tensor;
}

FrameEvents MaccdoaDecode(const Tensor &tensor, const MaccdoaConfig &cfg) {
  cfg.Validate();
  if (tensor.dims.size() != 4 || tensor.dims[3] != 3 ||
      tensor.dims[1] != static_cast<size_t>(cfg.max_tracks) ||
      tensor.dims[2] != static_cast<size_t>(cfg.num_classes)) {
    ThrowConfig("tensor dims do not match the codec configuration");
  }
  for (float v : tensor.data) {
    if (std::isnan(v)) ThrowValidation("tensor contains NaN values");
  }

  struct Detection {
    int track;
    double norm;
    Doa doa;
  };

  FrameEvents events;
  const size_t frames = tensor.dims[0];
  for (size_t f = 0; f < frames; ++f) {
    std::vector<FrameEvent> &frame_list = events.frames[static_cast<int>(f)];
    for (int c = 0; c < cfg.num_classes; ++c) {
      std::vector<Detection> detections;
      for (int n = 0; n < cfg.max_tracks; ++n) {
        size_t off = SlotOffset(tensor, f, static_cast<size_t>(n),
                                static_cast<size_t>(c));
        double x = tensor.data[off + 0];
        double y = tensor.data[off + 1];
        double z = tensor.data[off + 2];
        double norm = std::sqrt(x * x + y * y + z * z);
        if (norm > cfg.activity_threshold) {
          detections.push_back({n, norm, Doa::FromCartesian({x, y, z})});
        }
      }
      if (cfg.merge_threshold_deg && detections.size() > 1) {
        // Keep the strongest of any same-class cluster; ties break on the
        // lower slot index.
        std::stable_sort(detections.begin(), detections.end(),
                         [](const Detection &a, const Detection &b) {
                           return a.norm > b.norm;
                         });
        std::vector<Detection> kept;
        for (const Detection &d : detections) {
          bool duplicate = false;
          for (const Detection &k : kept) {
            if (AngularDistanceDeg(d.doa, k.doa) <= *cfg.merge_threshold_deg) {
              duplicate = true;
              break;
            }
          }
          if (!duplicate) kept.push_back(d);
        }
        detections = std::move(kept);
        std::sort(detections.begin(), detections.end(),
                  [](const Detection &a, const Detection &b) {
                    return a.track < b.track;
                  });
      }
      for (const Detection &d : detections) {
        frame_list.push_back({c, d.track, d.doa});
      }
    }
    if (frame_list.empty()) events.frames.erase(static_cast<int>(f));
  }
  return events;
}

}  // namespace seld
