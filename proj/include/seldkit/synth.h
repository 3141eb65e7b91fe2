// seldkit/synth.h

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

#ifndef SELDKIT_SYNTH_H_
#define SELDKIT_SYNTH_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seldkit/annotations.h"
#include "seldkit/geometry.h"
#include "seldkit/wav.h"

namespace seld {

// One measured spatial room impulse response: a 4-channel IR labeled with the
// source direction it was captured from.
struct SrirEntry {
  std::string room_id;
  Doa position;
  std::vector<std::vector<float>> impulse_response;  // 4 channels
};

struct SrirBank {
  int sample_rate = 24000;
  std::vector<SrirEntry> entries;

  std::vector<std::string> RoomIds() const;
  std::vector<int> EntriesForRoom(const std::string &room_id) const;
};

struct EventSample {
  std::filesystem::path file;
  std::vector<float> samples;  // mono
};

struct EventBank {
  int sample_rate = 24000;
  std::map<int, std::vector<EventSample>> samples_by_class;
};

// Directory loaders. The SRIR directory carries `srirs.json`
// ({"rooms": {room_id: [{"file", "azimuth", "elevation"}, ...]}}), the event
// directory `events.json` ({"classes": {"<class_idx>": [files...]}}); paths
// are relative to the manifest. IRs must be 4-channel, event samples mono,
// all at the bank sample rate.
SrirBank LoadSrirBank(const std::filesystem::path &dir);
EventBank LoadEventBank(const std::filesystem::path &dir);

struct SceneConfig {
  double duration_s = 60.0;
  int num_clips = 1;
  int max_polyphony = 3;  // cap on concurrent placements
  std::vector<double> class_weights;  // empty: uniform over classes in the bank
  double gain_db_min = -12.0;
  double gain_db_max = 0.0;
  double mean_gap_s = 1.0;  // exponential inter-onset spacing
  std::optional<double> noise_level_db;  // per-channel white noise RMS (dBFS)
  uint64_t seed = 0;
  int sample_rate = 24000;

  void Validate() const;
  size_t duration_samples() const {
    return static_cast<size_t>(duration_s * sample_rate + 0.5);
  }
};

struct Placement {
  size_t onset_sample = 0;
  int class_idx = 0;
  int track_idx = 0;
  int sample_ref = 0;  // index into EventBank::samples_by_class[class_idx]
  int srir_ref = 0;    // index into SrirBank::entries
  double gain = 1.0;
};

// Deterministic plan for one clip; renders to audio + labels without further
// randomness (the noise stream is seeded from the plan).
struct SceneTimeline {
  std::string room_id;
  double duration_s = 60.0;
  int sample_rate = 24000;
  uint64_t noise_seed = 0;
  std::vector<Placement> placements;
};

// Draws placements with exponential inter-onset gaps, class selection by
// weight, SRIR positions uniform within one randomly chosen room, and event
// gains uniform in dB. Concurrency never exceeds max_polyphony (onsets are
// deferred until enough active events end). Identical (cfg, clip_seed, banks)
// give identical timelines. Throws kConfig when a positively weighted class
// has no samples.
SceneTimeline PlanScene(const SceneConfig &cfg, const SrirBank &srirs,
                        const EventBank &events, uint64_t clip_seed);

// Convolves each placement's dry sample with its SRIR (overlap-add FFT),
// sums into a 4-channel clip cropped to the configured duration, and derives
// one label row per active 100 ms frame (onset through onset + dry length,
// DOA = SRIR position rounded to integer degrees).
std::pair<AudioClip, std::vector<EventRecord>> RenderScene(
    const SceneTimeline &timeline, const SrirBank &srirs,
    const EventBank &events, const SceneConfig &cfg);

}  // namespace seld

#endif  // SELDKIT_SYNTH_H_
