// seldkit/synth.cc

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

#include "seldkit/synth.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <tuple>

#include <json.hpp>

#include "seldkit/convolve.h"
#include "seldkit/error.h"
#include "seldkit/rng.h"

namespace seld {

namespace {

nlohmann::json ReadManifest(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) ThrowIo("cannot open manifest " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception &e) {
    ThrowParse(path.string() + ": invalid JSON: " + e.what());
  }
  return j;
}

constexpr int kFramesPerSecond = 10;  // 100 ms label frames

}  // namespace

std::vector<std::string> SrirBank::RoomIds() const {
  std::vector<std::string> ids;
  for (const SrirEntry &e : entries) {
    if (std::find(ids.begin(), ids.end(), e.room_id) == ids.end()) {
      ids.push_back(e.room_id);
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<int> SrirBank::EntriesForRoom(const std::string &room_id) const {
  std::vector<int> indices;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].room_id == room_id) indices.push_back(static_cast<int>(i));
  }
  return indices;
}

SrirBank LoadSrirBank(const std::filesystem::path &dir) {
  const std::filesystem::path manifest_path = dir / "srirs.json";
  nlohmann::json manifest = ReadManifest(manifest_path);
  if (!manifest.contains("rooms") || !manifest["rooms"].is_object()) {
    ThrowParse(manifest_path.string() + ": missing 'rooms' object");
  }

  SrirBank bank;
  for (const auto &[room_id, irs] : manifest["rooms"].items()) {
    if (!irs.is_array()) {
      ThrowParse(manifest_path.string() + ": room '" + room_id +
                 "' must hold an array");
    }
    for (const auto &entry : irs) {
      std::string file;
      double az, el;
      try {
        file = entry.at("file").get<std::string>();
        az = entry.at("azimuth").get<double>();
        el = entry.at("elevation").get<double>();
      } catch (const nlohmann::json::exception &e) {
        ThrowParse(manifest_path.string() + ": room '" + room_id +
                   "': " + e.what());
      }
      AudioClip ir = ReadWav(dir / file);
      if (ir.num_channels() != 4) {
        ThrowValidation(file + ": impulse responses must have 4 channels, got " +
                        std::to_string(ir.num_channels()));
      }
      if (ir.sample_rate != bank.sample_rate) {
        ThrowValidation(file + ": expected " + std::to_string(bank.sample_rate) +
                        " Hz, got " + std::to_string(ir.sample_rate));
      }
      bank.entries.push_back(
          {room_id, Doa::FromDegrees(az, el), std::move(ir.channels)});
    }
  }
  if (bank.entries.empty()) {
    ThrowValidation(manifest_path.string() + ": bank holds no impulse responses");
  }
  return bank;
}

EventBank LoadEventBank(const std::filesystem::path &dir) {
  const std::filesystem::path manifest_path = dir / "events.json";
  nlohmann::json manifest = ReadManifest(manifest_path);
  if (!manifest.contains("classes") || !manifest["classes"].is_object()) {
    ThrowParse(manifest_path.string() + ": missing 'classes' object");
  }

  EventBank bank;
  for (const auto &[class_key, files] : manifest["classes"].items()) {
    int class_idx;
    try {
      class_idx = std::stoi(class_key);
    } catch (const std::exception &) {
      ThrowParse(manifest_path.string() + ": class key '" + class_key +
                 "' is not an integer");
    }
    if (class_idx < 0) {
      ThrowValidation(manifest_path.string() + ": negative class index");
    }
    if (!files.is_array()) {
      ThrowParse(manifest_path.string() + ": class '" + class_key +
                 "' must hold an array of files");
    }
    for (const auto &file : files) {
      if (!file.is_string()) {
        ThrowParse(manifest_path.string() + ": class '" + class_key +
                   "' entries must be file names");
      }
      const std::string name = file.get<std::string>();
      AudioClip clip = ReadWav(dir / name);
      if (clip.num_channels() != 1) {
        ThrowValidation(name + ": event samples must be mono");
      }
      if (clip.sample_rate != bank.sample_rate) {
        ThrowValidation(name + ": expected " + std::to_string(bank.sample_rate) +
                        " Hz, got " + std::to_string(clip.sample_rate));
      }
      if (clip.num_samples() == 0) {
        ThrowValidation(name + ": empty sample");
      }
      bank.samples_by_class[class_idx].push_back(
          {dir / name, std::move(clip.channels[0])});
    }
  }
  return bank;
}

void SceneConfig::Validate() const {
  if (!(duration_s > 0.0)) ThrowConfig("scene duration must be positive");
  if (num_clips < 0) ThrowConfig("clip count must be >= 0");
  if (max_polyphony < 1) ThrowConfig("max polyphony must be >= 1");
  if (!(mean_gap_s > 0.0)) ThrowConfig("mean inter-event gap must be positive");
  if (gain_db_max < gain_db_min) ThrowConfig("gain range is inverted");
  for (double w : class_weights) {
    if (!(w >= 0.0)) ThrowConfig("class weights must be non-negative");
  }
}

SceneTimeline PlanScene(const SceneConfig &cfg, const SrirBank &srirs,
                        const EventBank &events, uint64_t clip_seed) {
  cfg.Validate();
  if (srirs.entries.empty()) ThrowConfig("SRIR bank is empty");

  // Weighted classes: explicit weights, or uniform over the bank's classes.
  std::vector<std::pair<int, double>> weighted;
  if (cfg.class_weights.empty()) {
    for (const auto &[class_idx, samples] : events.samples_by_class) {
      if (!samples.empty()) weighted.emplace_back(class_idx, 1.0);
    }
  } else {
    for (size_t c = 0; c < cfg.class_weights.size(); ++c) {
      if (cfg.class_weights[c] <= 0.0) continue;
      auto it = events.samples_by_class.find(static_cast<int>(c));
      if (it == events.samples_by_class.end() || it->second.empty()) {
        ThrowConfig("class " + std::to_string(c) +
                    " has positive weight but no samples in the bank");
      }
      weighted.emplace_back(static_cast<int>(c), cfg.class_weights[c]);
    }
  }
  if (weighted.empty()) ThrowConfig("no classes available for placement");
  double total_weight = 0.0;
  for (const auto &[c, w] : weighted) total_weight += w;

  Rng rng(clip_seed);
  SceneTimeline timeline;
  timeline.duration_s = cfg.duration_s;
  timeline.sample_rate = cfg.sample_rate;
  timeline.noise_seed = SplitMix64(clip_seed ^ 0xD1B54A32D192ED03ULL);

  const std::vector<std::string> rooms = srirs.RoomIds();
  timeline.room_id = rooms[rng.UniformInt(rooms.size())];
  const std::vector<int> room_entries = srirs.EntriesForRoom(timeline.room_id);

  const size_t duration_samples = cfg.duration_samples();
  const int frame_samples = cfg.sample_rate / kFramesPerSecond;

  struct ActiveSpan {
    size_t end_sample;
    int class_idx;
    int track_idx;
    int first_frame;
    int last_frame;
  };
  std::vector<ActiveSpan> placed;

  double onset_s = 0.0;
  while (true) {
    onset_s += rng.Exponential(cfg.mean_gap_s);
    size_t onset = static_cast<size_t>(onset_s * cfg.sample_rate);
    if (onset >= duration_samples) break;

    const auto &[class_idx, sample_idx] = [&] {
      double u = rng.Uniform() * total_weight;
      double acc = 0.0;
      int chosen = weighted.back().first;
      for (const auto &[c, w] : weighted) {
        acc += w;
        if (u < acc) {
          chosen = c;
          break;
        }
      }
      const auto &samples = events.samples_by_class.at(chosen);
      return std::make_pair(chosen,
                            static_cast<int>(rng.UniformInt(samples.size())));
    }();
    const size_t length =
        events.samples_by_class.at(class_idx)[sample_idx].samples.size();
    const int srir_ref = room_entries[rng.UniformInt(room_entries.size())];
    const double gain =
        std::pow(10.0, rng.Uniform(cfg.gain_db_min, cfg.gain_db_max) / 20.0);

    // Defer the onset until the polyphony cap frees up: among the spans still
    // active at the candidate onset, wait for enough of them to end.
    std::vector<size_t> active_ends;
    for (const ActiveSpan &span : placed) {
      if (span.end_sample > onset) active_ends.push_back(span.end_sample);
    }
    if (static_cast<int>(active_ends.size()) >= cfg.max_polyphony) {
      std::sort(active_ends.begin(), active_ends.end());
      onset = active_ends[active_ends.size() - cfg.max_polyphony];
      onset_s = static_cast<double>(onset) / cfg.sample_rate;
    }
    if (onset + length > duration_samples) break;

    const size_t end = onset + length;
    const int first_frame = static_cast<int>(onset / frame_samples);
    const int last_frame = static_cast<int>((end - 1) / frame_samples);
    // Smallest track id unused by same-class placements sharing a label frame.
    std::set<int> used_tracks;
    for (const ActiveSpan &span : placed) {
      if (span.class_idx == class_idx && span.first_frame <= last_frame &&
          first_frame <= span.last_frame) {
        used_tracks.insert(span.track_idx);
      }
    }
    int track = 0;
    while (used_tracks.count(track) > 0) ++track;

    timeline.placements.push_back(
        {onset, class_idx, track, sample_idx, srir_ref, gain});
    placed.push_back({end, class_idx, track, first_frame, last_frame});
  }
  return timeline;
}

std::pair<AudioClip, std::vector<EventRecord>> RenderScene(
    const SceneTimeline &timeline, const SrirBank &srirs,
    const EventBank &events, const SceneConfig &cfg) {
  cfg.Validate();
  if (timeline.sample_rate != cfg.sample_rate) {
    ThrowConfig("timeline sample rate does not match the configuration");
  }
  const size_t duration_samples = cfg.duration_samples();
  const int frame_samples = cfg.sample_rate / kFramesPerSecond;

  std::vector<std::vector<double>> mix(4,
                                       std::vector<double>(duration_samples, 0.0));
  std::vector<EventRecord> records;

  for (const Placement &p : timeline.placements) {
    const auto class_it = events.samples_by_class.find(p.class_idx);
    if (class_it == events.samples_by_class.end() ||
        p.sample_ref < 0 ||
        p.sample_ref >= static_cast<int>(class_it->second.size())) {
      ThrowValidation("placement references a missing event sample");
    }
    if (p.srir_ref < 0 ||
        p.srir_ref >= static_cast<int>(srirs.entries.size())) {
      ThrowValidation("placement references a missing impulse response");
    }
    const EventSample &sample = class_it->second[p.sample_ref];
    const SrirEntry &srir = srirs.entries[p.srir_ref];
    if (p.onset_sample + sample.samples.size() > duration_samples) {
      ThrowValidation("placement extends past the scene duration");
    }

    std::vector<double> dry(sample.samples.size());
    for (size_t i = 0; i < dry.size(); ++i) {
      dry[i] = p.gain * static_cast<double>(sample.samples[i]);
    }
    std::vector<std::vector<double>> irs(4);
    for (int ch = 0; ch < 4; ++ch) {
      irs[ch].assign(srir.impulse_response[ch].begin(),
                     srir.impulse_response[ch].end());
    }
    std::vector<std::vector<double>> wet = FftConvolve(dry, irs);
    for (int ch = 0; ch < 4; ++ch) {
      const size_t limit =
          std::min(wet[ch].size(), duration_samples - p.onset_sample);
      for (size_t i = 0; i < limit; ++i) {
        mix[ch][p.onset_sample + i] += wet[ch][i];
      }
    }

    const int first_frame = static_cast<int>(p.onset_sample / frame_samples);
    const int last_frame = static_cast<int>(
        (p.onset_sample + sample.samples.size() - 1) / frame_samples);
    int az = RoundAngleDeg(srir.position.azimuth_deg());
    if (az >= 180) az -= 360;
    int el = RoundAngleDeg(srir.position.elevation_deg());
    for (int frame = first_frame; frame <= last_frame; ++frame) {
      records.push_back({frame, p.class_idx, p.track_idx, az, el});
    }
  }

  if (cfg.noise_level_db) {
    const double level = std::pow(10.0, *cfg.noise_level_db / 20.0);
    Rng noise_rng(timeline.noise_seed);
    for (int ch = 0; ch < 4; ++ch) {
      for (size_t i = 0; i < duration_samples; ++i) {
        mix[ch][i] += level * noise_rng.Gaussian();
      }
    }
  }

  AudioClip clip;
  clip.sample_rate = cfg.sample_rate;
  clip.channels.assign(4, std::vector<float>(duration_samples));
  for (int ch = 0; ch < 4; ++ch) {
    for (size_t i = 0; i < duration_samples; ++i) {
      clip.channels[ch][i] = static_cast<float>(mix[ch][i]);
    }
  }

  std::sort(records.begin(), records.end(),
            [](const EventRecord &a, const EventRecord &b) {
              return std::tie(a.frame, a.class_idx, a.track_idx) <
                     std::tie(b.frame, b.class_idx, b.track_idx);
            });
  return {std::move(clip), std::move(records)};
}

}  // namespace seld
