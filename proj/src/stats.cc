// seldkit/stats.cc

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

#include "seldkit/stats.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "seldkit/error.h"

namespace seld {

namespace {

void Tally(ActivityRow *row, int polyphony) {
  if (polyphony <= 0) return;
  ++row->active_frames;
  row->instance_frame_sum += polyphony;
  row->max_polyphony = std::max(row->max_polyphony, polyphony);
  if (static_cast<size_t>(polyphony) > row->frames_at_polyphony.size()) {
    row->frames_at_polyphony.resize(static_cast<size_t>(polyphony), 0);
  }
  ++row->frames_at_polyphony[static_cast<size_t>(polyphony) - 1];
}

}  // namespace

double ActivityRow::polyphony_share_percent(int level) const {
  if (level < 1 || static_cast<size_t>(level) > frames_at_polyphony.size() ||
      active_frames == 0) {
    return 0.0;
  }
  return 100.0 * frames_at_polyphony[static_cast<size_t>(level) - 1] /
         active_frames;
}

ActivityStats ComputeStats(const std::vector<AnnotatedFile> &files,
                           int num_classes) {
  if (num_classes < 1) ThrowConfig("need at least one class");
  ActivityStats stats;
  stats.per_class.resize(static_cast<size_t>(num_classes));

  for (const AnnotatedFile &file : files) {
    int total = file.total_frames >= 0 ? file.total_frames
                                       : file.events.num_frames();
    if (file.events.num_frames() > total) {
      ThrowValidation("annotations extend past the stated file length");
    }
    stats.global.total_frames += total;
    for (auto &row : stats.per_class) row.total_frames += total;

    for (const auto &[frame, events] : file.events.frames) {
      std::vector<int> per_class(static_cast<size_t>(num_classes), 0);
      for (const FrameEvent &ev : events) {
        if (ev.class_idx < 0 || ev.class_idx >= num_classes) {
          ThrowValidation("class index " + std::to_string(ev.class_idx) +
                          " outside [0, " + std::to_string(num_classes) + ")");
        }
        ++per_class[static_cast<size_t>(ev.class_idx)];
      }
      Tally(&stats.global, static_cast<int>(events.size()));
      for (int c = 0; c < num_classes; ++c) {
        Tally(&stats.per_class[static_cast<size_t>(c)],
              per_class[static_cast<size_t>(c)]);
      }
    }
  }
  return stats;
}

namespace {

nlohmann::json RowToJson(const ActivityRow &row) {
  nlohmann::json j;
  j["coverage_percent"] = row.coverage_percent();
  j["max_polyphony"] = row.max_polyphony;
  j["mean_polyphony"] = row.mean_polyphony();
  nlohmann::json dist = nlohmann::json::array();
  for (int level = 1; level <= row.max_polyphony; ++level) {
    dist.push_back(row.polyphony_share_percent(level));
  }
  j["polyphony_share_percent"] = dist;
  return j;
}

}  // namespace

std::string StatsToJson(const ActivityStats &stats, const ClassSet &classes) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["total_frames"] = stats.global.total_frames;
  j["global"] = RowToJson(stats.global);
  j["classes"] = nlohmann::json::array();
  for (size_t c = 0; c < stats.per_class.size(); ++c) {
    nlohmann::json row = RowToJson(stats.per_class[c]);
    row["class"] = c;
    row["label"] = static_cast<int>(c) < classes.size()
                       ? classes.label(static_cast<int>(c))
                       : "?";
    j["classes"].push_back(row);
  }
  return j.dump(2);
}

std::string StatsToTable(const ActivityStats &stats, const ClassSet &classes) {
  std::ostringstream os;
  char buf[64];
  int max_level = stats.global.max_polyphony;

  auto print_row = [&os, &buf](const std::string &name,
                               const ActivityRow &row, int levels) {
    os << "  " << name << "\n";
    std::snprintf(buf, sizeof(buf), "    coverage: %6.1f%%",
                  row.coverage_percent());
    os << buf << "\n";
    std::snprintf(buf, sizeof(buf), "    max polyphony: %d", row.max_polyphony);
    os << buf << "\n";
    std::snprintf(buf, sizeof(buf), "    mean polyphony: %.2f",
                  row.mean_polyphony());
    os << buf << "\n";
    for (int level = 1; level <= levels; ++level) {
      std::snprintf(buf, sizeof(buf), "    polyphony %d: %6.1f%%", level,
                    row.polyphony_share_percent(level));
      os << buf << "\n";
    }
  };

  if (stats.global.total_frames == 0) {
    os << "  (no annotated frames)\n";
    return os.str();
  }
  print_row("global", stats.global, max_level);
  for (size_t c = 0; c < stats.per_class.size(); ++c) {
    std::string label = static_cast<int>(c) < classes.size()
                            ? classes.label(static_cast<int>(c))
                            : "class " + std::to_string(c);
    print_row(label, stats.per_class[c], stats.per_class[c].max_polyphony);
  }
  return os.str();
}

}  // namespace seld
