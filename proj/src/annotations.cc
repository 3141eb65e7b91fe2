// seldkit/annotations.cc

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

#include "seldkit/annotations.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <tuple>

#include "seldkit/error.h"

namespace seld {

namespace {

// Strict integer parse of one CSV field; surrounding spaces allowed.
bool ParseIntField(std::string_view field, int *out) {
  size_t begin = field.find_first_not_of(" \t");
  if (begin == std::string_view::npos) return false;
  size_t end = field.find_last_not_of(" \t");
  field = field.substr(begin, end - begin + 1);
  if (field.empty()) return false;
  size_t i = 0;
  bool negative = false;
  if (field[0] == '-' || field[0] == '+') {
    negative = field[0] == '-';
    i = 1;
  }
  if (i == field.size()) return false;
  long value = 0;
  for (; i < field.size(); ++i) {
    if (field[i] < '0' || field[i] > '9') return false;
    value = value * 10 + (field[i] - '0');
    if (value > 1000000000L) return false;
  }
  *out = static_cast<int>(negative ? -value : value);
  return true;
}

void ValidateRecord(const EventRecord &r, int num_classes, int line) {
  auto fail = [line](const std::string &field, int value,
                     const std::string &range) {
    ThrowValidation("line " + std::to_string(line) + ": " + field + " " +
                    std::to_string(value) + " out of range " + range);
  };
  if (r.frame < 0) fail("frame", r.frame, "[0, inf)");
  if (r.class_idx < 0) fail("class", r.class_idx, "[0, inf)");
  if (num_classes >= 0 && r.class_idx >= num_classes) {
    fail("class", r.class_idx, "[0, " + std::to_string(num_classes) + ")");
  }
  if (r.track_idx < 0) fail("track", r.track_idx, "[0, inf)");
  if (r.azimuth < -180 || r.azimuth >= 180) {
    fail("azimuth", r.azimuth, "[-180, 180)");
  }
  if (r.elevation < -90 || r.elevation > 90) {
    fail("elevation", r.elevation, "[-90, 90]");
  }
}

}  // namespace

std::vector<EventRecord> ParseMetadataCsv(std::string_view text,
                                          int num_classes) {
  std::vector<EventRecord> records;
  int line_number = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = eol == std::string_view::npos
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    int fields[5];
    size_t field_start = 0;
    int field_count = 0;
    for (size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == ',') {
        if (field_count >= 5) {
          ThrowParse("line " + std::to_string(line_number) +
                     ": expected 5 fields, found more");
        }
        if (!ParseIntField(line.substr(field_start, i - field_start),
                           &fields[field_count])) {
          ThrowParse("line " + std::to_string(line_number) + ": field " +
                     std::to_string(field_count + 1) + " is not an integer");
        }
        ++field_count;
        field_start = i + 1;
      }
    }
    if (field_count != 5) {
      ThrowParse("line " + std::to_string(line_number) + ": expected 5 fields, found " +
                 std::to_string(field_count));
    }
    EventRecord r{fields[0], fields[1], fields[2], fields[3], fields[4]};
    ValidateRecord(r, num_classes, line_number);
    records.push_back(r);
  }
  return records;
}

std::string WriteMetadataCsv(std::vector<EventRecord> records) {
  std::sort(records.begin(), records.end(), [](const EventRecord &a,
                                               const EventRecord &b) {
    return std::tie(a.frame, a.class_idx, a.track_idx, a.azimuth, a.elevation) <
           std::tie(b.frame, b.class_idx, b.track_idx, b.azimuth, b.elevation);
  });
  std::string out;
  for (const EventRecord &r : records) {
    out += std::to_string(r.frame);
    out += ',';
    out += std::to_string(r.class_idx);
    out += ',';
    out += std::to_string(r.track_idx);
    out += ',';
    out += std::to_string(r.azimuth);
    out += ',';
    out += std::to_string(r.elevation);
    out += '\n';
  }
  return out;
}

FrameEvents EventsToFrames(const std::vector<EventRecord> &records) {
  FrameEvents result;
  std::set<std::tuple<int, int, int>> seen;
  for (const EventRecord &r : records) {
    if (!seen.insert({r.frame, r.class_idx, r.track_idx}).second) {
      ThrowValidation("duplicate (frame, class, track) = (" +
                      std::to_string(r.frame) + ", " +
                      std::to_string(r.class_idx) + ", " +
                      std::to_string(r.track_idx) + ")");
    }
    result.frames[r.frame].push_back(
        {r.class_idx, r.track_idx,
         Doa::FromDegrees(static_cast<double>(r.azimuth),
                          static_cast<double>(r.elevation))});
  }
  for (auto &[frame, events] : result.frames) {
    std::sort(events.begin(), events.end(),
              [](const FrameEvent &a, const FrameEvent &b) {
                return std::tie(a.class_idx, a.track_idx) <
                       std::tie(b.class_idx, b.track_idx);
              });
  }
  return result;
}

std::vector<EventRecord> FramesToEvents(const FrameEvents &frames) {
  std::vector<EventRecord> records;
  for (const auto &[frame, events] : frames.frames) {
    for (const FrameEvent &e : events) {
      int az = RoundAngleDeg(e.doa.azimuth_deg());
      if (az >= 180) az -= 360;
      records.push_back({frame, e.class_idx, e.track_idx, az,
                         RoundAngleDeg(e.doa.elevation_deg())});
    }
  }
  return records;
}

int RoundAngleDeg(double deg) {
  // Half away from zero, the convention of the published label files.
  return static_cast<int>(deg >= 0.0 ? std::floor(deg + 0.5)
                                     : std::ceil(deg - 0.5));
}

}  // namespace seld
