// tools/seldkit_main.cc

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

// Batch front end: evaluate | features | decode | synth | stats. Exit codes:
// 0 success, 1 internal error, 2 input/validation error.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "seldkit/annotations.h"
#include "seldkit/class_set.h"
#include "seldkit/error.h"
#include "seldkit/maccdoa.h"
#include "seldkit/metrics.h"
#include "seldkit/rng.h"
#include "seldkit/spatial_features.h"
#include "seldkit/stats.h"
#include "seldkit/synth.h"
#include "seldkit/tensor.h"
#include "seldkit/version.h"
#include "seldkit/wav.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;

int DefaultJobs() {
  if (const char *env = std::getenv("SELDKIT_JOBS")) {
    int jobs = std::atoi(env);
    if (jobs > 0) return jobs;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, count) on a worker pool; collects one error string
// per failed index. Results are index-addressed, so output never depends on
// worker count.
template <typename Fn>
std::vector<std::pair<size_t, std::string>> RunParallel(size_t count, int jobs,
                                                        Fn &&fn) {
  std::vector<std::string> errors(count);
  std::atomic<size_t> next{0};
  const int workers =
      std::max(1, std::min(jobs, static_cast<int>(std::max<size_t>(count, 1))));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= count) break;
        try {
          fn(i);
        } catch (const std::exception &e) {
          errors[i] = e.what();
        }
      }
    });
  }
  for (std::thread &t : pool) t.join();
  std::vector<std::pair<size_t, std::string>> failures;
  for (size_t i = 0; i < count; ++i) {
    if (!errors[i].empty()) failures.emplace_back(i, errors[i]);
  }
  return failures;
}

std::vector<fs::path> ListFiles(const fs::path &dir, const std::string &ext) {
  if (!fs::exists(dir)) seld::ThrowIo("directory not found: " + dir.string());
  if (!fs::is_directory(dir)) seld::ThrowIo(dir.string() + " is not a directory");
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ext) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::string ReadTextFile(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) seld::ThrowIo("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

uint64_t HashFile(const fs::path &path) {
  std::string bytes = ReadTextFile(path);
  return seld::Fnv1a64(bytes.data(), bytes.size());
}

// Every run emits a manifest: command, config echo, inputs, output hashes.
struct RunManifest {
  std::string command;
  nlohmann::json config = nlohmann::json::object();
  std::vector<std::string> inputs;
  std::vector<fs::path> outputs;

  nlohmann::json ToJson() const {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["tool_version"] = seld::kVersion;
    j["command"] = command;
    j["config"] = config;
    j["inputs"] = inputs;
    j["outputs"] = nlohmann::json::array();
    for (const fs::path &p : outputs) {
      j["outputs"].push_back({{"path", p.filename().string()},
                              {"fnv1a64", HashFile(p)}});
    }
    return j;
  }

  void WriteTo(const fs::path &path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) seld::ThrowIo("cannot write manifest " + path.string());
    out << ToJson().dump(2) << "\n";
  }
};

void PrintFailures(const std::vector<fs::path> &files,
                   const std::vector<std::pair<size_t, std::string>> &failures) {
  for (const auto &[index, message] : failures) {
    std::cerr << "error: " << files[index].filename().string() << ": "
              << message << "\n";
  }
}

// ---------------------------------------------------------------------------
// evaluate

int CmdEvaluate(const fs::path &pred_dir, const fs::path &ref_dir,
                double threshold, double segment, const std::string &average,
                const std::string &json_path, int jobs) {
  seld::MetricsConfig cfg;
  cfg.spatial_threshold_deg = threshold;
  cfg.segment_length_s = segment;
  cfg.averaging = average == "macro"   ? seld::Averaging::kMacro
                  : average == "micro" ? seld::Averaging::kMicro
                                       : seld::Averaging::kBoth;
  cfg.Validate();

  std::vector<fs::path> pred_files = ListFiles(pred_dir, ".csv");
  std::vector<fs::path> ref_files = ListFiles(ref_dir, ".csv");

  bool unmatched = false;
  auto has_name = [](const std::vector<fs::path> &files, const fs::path &name) {
    return std::any_of(files.begin(), files.end(), [&name](const fs::path &p) {
      return p.filename() == name;
    });
  };
  for (const fs::path &p : pred_files) {
    if (!has_name(ref_files, p.filename())) {
      std::cerr << "error: prediction " << p.filename().string()
                << " has no reference counterpart\n";
      unmatched = true;
    }
  }
  for (const fs::path &r : ref_files) {
    if (!has_name(pred_files, r.filename())) {
      std::cerr << "error: reference " << r.filename().string()
                << " has no prediction counterpart\n";
      unmatched = true;
    }
  }
  if (unmatched) return kExitInput;

  seld::ClassSet classes;
  std::vector<seld::EvalTotals> per_file(pred_files.size(),
                                         seld::EvalTotals(cfg.num_classes));
  auto failures = RunParallel(pred_files.size(), jobs, [&](size_t i) {
    try {
      seld::FrameEvents pred = seld::EventsToFrames(seld::ParseMetadataCsv(
          ReadTextFile(pred_files[i]), cfg.num_classes));
      seld::FrameEvents ref = seld::EventsToFrames(seld::ParseMetadataCsv(
          ReadTextFile(ref_dir / pred_files[i].filename()), cfg.num_classes));
      per_file[i] = seld::AccumulateFilePair(pred, ref, cfg);
    } catch (const seld::SeldError &e) {
      throw seld::SeldError(e.kind(),
                            pred_files[i].filename().string() + ": " + e.what());
    }
  });
  if (!failures.empty()) {
    for (const auto &[index, message] : failures) {
      std::cerr << "error: " << message << "\n";
    }
    return kExitInput;
  }

  seld::EvalTotals totals(cfg.num_classes);
  for (const seld::EvalTotals &t : per_file) totals.Merge(t);
  seld::MetricsReport report = seld::Finalize(totals, cfg);

  std::cout << "evaluated " << pred_files.size() << " file pair(s)\n"
            << seld::ReportToTable(report, classes);

  if (!json_path.empty()) {
    RunManifest manifest;
    manifest.command = "evaluate";
    manifest.config = {{"threshold", threshold},
                       {"segment", segment},
                       {"average", average}};
    for (const fs::path &p : pred_files) {
      manifest.inputs.push_back(p.filename().string());
    }
    nlohmann::json j = nlohmann::json::parse(seld::ReportToJson(report, classes));
    j["manifest"] = manifest.ToJson();
    std::ofstream out(json_path, std::ios::trunc);
    if (!out) seld::ThrowIo("cannot write " + json_path);
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// features

int CmdFeatures(const fs::path &input_dir, const std::string &format_name,
                const std::string &kind_name, const fs::path &out_dir,
                int jobs) {
  const seld::AudioFormat format = seld::ParseAudioFormat(format_name);
  const seld::FeatureKind kind = seld::ParseFeatureKind(kind_name);
  // Reject incompatible combinations before touching any file.
  if (kind == seld::FeatureKind::kMelIv && format != seld::AudioFormat::kFoa) {
    seld::ThrowConfig("mel_iv features require the FOA format");
  }
  if (kind != seld::FeatureKind::kMelIv && format != seld::AudioFormat::kMic) {
    seld::ThrowConfig(kind_name + " features require the MIC format");
  }

  std::vector<fs::path> files = ListFiles(input_dir, ".wav");
  fs::create_directories(out_dir);
  const seld::StftConfig stft_cfg;

  auto failures = RunParallel(files.size(), jobs, [&](size_t i) {
    seld::AudioClip clip = seld::ReadWav(files[i]);
    if (clip.num_channels() != 4) {
      seld::ThrowValidation("expected 4 channels, got " +
                            std::to_string(clip.num_channels()));
    }
    if (clip.sample_rate != stft_cfg.sample_rate) {
      seld::ThrowValidation("expected " + std::to_string(stft_cfg.sample_rate) +
                            " Hz, got " + std::to_string(clip.sample_rate));
    }
    seld::Tensor tensor = seld::AssembleFeatures(clip, format, kind, stft_cfg);
    seld::WriteTensor(tensor, out_dir / files[i].stem());
  });
  PrintFailures(files, failures);

  RunManifest manifest;
  manifest.command = "features";
  manifest.config = {{"format", format_name}, {"kind", kind_name}};
  for (size_t i = 0; i < files.size(); ++i) {
    bool failed = std::any_of(
        failures.begin(), failures.end(),
        [i](const std::pair<size_t, std::string> &f) { return f.first == i; });
    if (failed) continue;
    manifest.inputs.push_back(files[i].filename().string());
    fs::path stem = out_dir / files[i].stem();
    manifest.outputs.push_back(stem.string() + ".bin");
    manifest.outputs.push_back(stem.string() + ".json");
  }
  manifest.WriteTo(out_dir / "run_manifest.json");
  return failures.empty() ? kExitOk : kExitInput;
}

// ---------------------------------------------------------------------------
// decode

int CmdDecode(const fs::path &input_dir, int n_tracks, bool n_tracks_set,
              double threshold, std::optional<double> merge_deg,
              const fs::path &out_dir, int jobs) {
  std::vector<fs::path> files = ListFiles(input_dir, ".bin");
  fs::create_directories(out_dir);

  auto failures = RunParallel(files.size(), jobs, [&](size_t i) {
    seld::Tensor tensor = seld::ReadTensor(files[i]);
    if (tensor.meta.kind != "maccdoa") {
      seld::ThrowValidation("tensor kind '" + tensor.meta.kind +
                            "' is not decodable (want maccdoa)");
    }
    if (tensor.dims.size() != 4 || tensor.dims[3] != 3) {
      seld::ThrowValidation("tensor is not a (T, N, C, 3) stack");
    }
    seld::MaccdoaConfig cfg;
    cfg.max_tracks = static_cast<int>(tensor.dims[1]);
    cfg.num_classes = static_cast<int>(tensor.dims[2]);
    cfg.activity_threshold = threshold;
    cfg.merge_threshold_deg = merge_deg;
    if (n_tracks_set && n_tracks != cfg.max_tracks) {
      seld::ThrowConfig("tensor holds " + std::to_string(cfg.max_tracks) +
                        " track slots, --n-tracks says " +
                        std::to_string(n_tracks));
    }
    seld::FrameEvents decoded = seld::MaccdoaDecode(tensor, cfg);
    std::string csv = seld::WriteMetadataCsv(seld::FramesToEvents(decoded));
    fs::path out_path = out_dir / files[i].stem();
    out_path += ".csv";
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) seld::ThrowIo("cannot write " + out_path.string());
    out << csv;
  });
  PrintFailures(files, failures);

  RunManifest manifest;
  manifest.command = "decode";
  manifest.config = {{"threshold", threshold}};
  if (merge_deg) manifest.config["merge_deg"] = *merge_deg;
  for (size_t i = 0; i < files.size(); ++i) {
    bool failed = std::any_of(
        failures.begin(), failures.end(),
        [i](const std::pair<size_t, std::string> &f) { return f.first == i; });
    if (failed) continue;
    manifest.inputs.push_back(files[i].filename().string());
    fs::path out_path = out_dir / files[i].stem();
    out_path += ".csv";
    manifest.outputs.push_back(out_path);
  }
  manifest.WriteTo(out_dir / "run_manifest.json");
  return failures.empty() ? kExitOk : kExitInput;
}

// ---------------------------------------------------------------------------
// synth

int CmdSynth(const fs::path &srir_dir, const fs::path &events_dir,
             const seld::SceneConfig &cfg, int fold, const fs::path &out_dir,
             int jobs) {
  seld::SrirBank srirs = seld::LoadSrirBank(srir_dir);
  seld::EventBank events = seld::LoadEventBank(events_dir);
  fs::create_directories(out_dir);

  const std::vector<std::string> rooms = srirs.RoomIds();
  auto room_number = [&rooms](const std::string &room_id) {
    auto it = std::find(rooms.begin(), rooms.end(), room_id);
    return static_cast<int>(it - rooms.begin()) + 1;
  };

  std::vector<fs::path> wav_paths(static_cast<size_t>(cfg.num_clips));
  std::vector<fs::path> csv_paths(static_cast<size_t>(cfg.num_clips));
  auto failures =
      RunParallel(static_cast<size_t>(cfg.num_clips), jobs, [&](size_t i) {
        uint64_t clip_seed = seld::DeriveClipSeed(cfg.seed, i);
        seld::SceneTimeline timeline =
            seld::PlanScene(cfg, srirs, events, clip_seed);
        auto [clip, records] = seld::RenderScene(timeline, srirs, events, cfg);

        char name[64];
        std::snprintf(name, sizeof(name), "fold%d_room%d_mix%03zu", fold,
                      room_number(timeline.room_id), i + 1);
        wav_paths[i] = out_dir / (std::string(name) + ".wav");
        csv_paths[i] = out_dir / (std::string(name) + ".csv");
        seld::WriteWav(clip, wav_paths[i]);
        std::ofstream out(csv_paths[i], std::ios::binary | std::ios::trunc);
        if (!out) seld::ThrowIo("cannot write " + csv_paths[i].string());
        out << seld::WriteMetadataCsv(records);
      });
  if (!failures.empty()) {
    for (const auto &[index, message] : failures) {
      std::cerr << "error: clip " << index + 1 << ": " << message << "\n";
    }
    return kExitInput;
  }

  RunManifest manifest;
  manifest.command = "synth";
  manifest.config = {{"clips", cfg.num_clips},
                     {"duration_s", cfg.duration_s},
                     {"seed", cfg.seed},
                     {"max_polyphony", cfg.max_polyphony},
                     {"gain_db_min", cfg.gain_db_min},
                     {"gain_db_max", cfg.gain_db_max},
                     {"mean_gap_s", cfg.mean_gap_s},
                     {"fold", fold}};
  if (cfg.noise_level_db) manifest.config["noise_db"] = *cfg.noise_level_db;
  manifest.inputs.push_back(srir_dir.string());
  manifest.inputs.push_back(events_dir.string());
  for (int i = 0; i < cfg.num_clips; ++i) {
    manifest.outputs.push_back(wav_paths[static_cast<size_t>(i)]);
    manifest.outputs.push_back(csv_paths[static_cast<size_t>(i)]);
  }
  manifest.WriteTo(out_dir / "run_manifest.json");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// stats

int CmdStats(const fs::path &annot_dir, const std::string &json_path) {
  std::vector<fs::path> files = ListFiles(annot_dir, ".csv");
  seld::ClassSet classes;

  std::vector<seld::AnnotatedFile> annotated;
  for (const fs::path &path : files) {
    try {
      annotated.push_back({seld::EventsToFrames(seld::ParseMetadataCsv(
                               ReadTextFile(path), classes.size())),
                           -1});
    } catch (const seld::SeldError &e) {
      std::cerr << "error: " << path.filename().string() << ": " << e.what()
                << "\n";
      return kExitInput;
    }
  }
  seld::ActivityStats stats = seld::ComputeStats(annotated, classes.size());
  std::cout << "stats over " << files.size() << " file(s):\n"
            << seld::StatsToTable(stats, classes);

  if (!json_path.empty()) {
    RunManifest manifest;
    manifest.command = "stats";
    for (const fs::path &p : files) {
      manifest.inputs.push_back(p.filename().string());
    }
    nlohmann::json j = nlohmann::json::parse(seld::StatsToJson(stats, classes));
    j["manifest"] = manifest.ToJson();
    std::ofstream out(json_path, std::ios::trunc);
    if (!out) seld::ThrowIo("cannot write " + json_path);
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"seldkit: SELD evaluation, features, mACCDOA codec and scene synthesis"};
  app.set_version_flag("--version", seld::kVersion);
  app.require_subcommand(1);
  int jobs = DefaultJobs();
  app.add_option("--jobs", jobs, "worker threads (env SELDKIT_JOBS)")
      ->capture_default_str();

  // evaluate
  auto *evaluate = app.add_subcommand("evaluate", "score predictions against references");
  std::string pred_dir, ref_dir, average = "both", eval_json;
  double threshold = 20.0, segment = 1.0;
  evaluate->add_option("--pred", pred_dir, "directory of prediction CSVs")->required();
  evaluate->add_option("--ref", ref_dir, "directory of reference CSVs")->required();
  evaluate->add_option("--threshold", threshold, "spatial threshold in degrees")
      ->capture_default_str();
  evaluate->add_option("--segment", segment, "segment length in seconds")
      ->capture_default_str();
  evaluate->add_option("--average", average, "macro|micro|both")
      ->check(CLI::IsMember({"macro", "micro", "both"}))
      ->capture_default_str();
  evaluate->add_option("--json", eval_json, "write the JSON report here");

  // features
  auto *features = app.add_subcommand("features", "extract input feature tensors");
  std::string feat_input, feat_format, feat_kind, feat_out;
  features->add_option("--input", feat_input, "directory of 4-channel WAVs")->required();
  features->add_option("--format", feat_format, "foa|mic")->required();
  features->add_option("--kind", feat_kind, "mel_iv|mel_gcc|salsa_lite")->required();
  features->add_option("--out", feat_out, "output directory")->required();

  // decode
  auto *decode = app.add_subcommand("decode", "decode mACCDOA tensors to label CSVs");
  std::string dec_input, dec_out;
  int n_tracks = 3;
  double dec_threshold = 0.5;
  double merge_deg = 0.0;
  decode->add_option("--input", dec_input, "directory of .bin/.json tensor pairs")->required();
  auto *n_tracks_opt =
      decode->add_option("--n-tracks", n_tracks, "track slots per class")
          ->capture_default_str();
  decode->add_option("--threshold", dec_threshold, "activity threshold on vector norm")
      ->capture_default_str();
  auto *merge_opt = decode->add_option(
      "--merge", merge_deg, "merge same-class detections within this angle (deg)");
  decode->add_option("--out", dec_out, "output directory")->required();

  // synth
  auto *synth = app.add_subcommand("synth", "generate spatial scene mixtures");
  std::string srir_dir, events_dir, synth_out, weights_csv;
  seld::SceneConfig scene_cfg;
  int fold = 1;
  double noise_db = 0.0;
  synth->add_option("--srir", srir_dir, "SRIR bank directory (srirs.json)")->required();
  synth->add_option("--events", events_dir, "event bank directory (events.json)")->required();
  synth->add_option("--clips", scene_cfg.num_clips, "number of clips")->required();
  synth->add_option("--duration", scene_cfg.duration_s, "clip length in seconds")
      ->capture_default_str();
  synth->add_option("--seed", scene_cfg.seed, "generation seed")->capture_default_str();
  synth->add_option("--max-polyphony", scene_cfg.max_polyphony,
                    "max concurrent events")->capture_default_str();
  synth->add_option("--gain-db-min", scene_cfg.gain_db_min, "event gain range low")
      ->capture_default_str();
  synth->add_option("--gain-db-max", scene_cfg.gain_db_max, "event gain range high")
      ->capture_default_str();
  synth->add_option("--mean-gap", scene_cfg.mean_gap_s,
                    "mean inter-onset gap in seconds")->capture_default_str();
  auto *noise_opt = synth->add_option("--noise-db", noise_db,
                                      "ambient white noise RMS in dBFS");
  synth->add_option("--weights", weights_csv,
                    "comma-separated per-class usage weights");
  synth->add_option("--fold", fold, "fold number used in output names")
      ->capture_default_str();
  synth->add_option("--out", synth_out, "output directory")->required();

  // stats
  auto *stats = app.add_subcommand("stats", "class activity and polyphony statistics");
  std::string annot_dir, stats_json;
  stats->add_option("--annot", annot_dir, "directory of label CSVs")->required();
  stats->add_option("--json", stats_json, "write the JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (evaluate->parsed()) {
      return CmdEvaluate(pred_dir, ref_dir, threshold, segment, average,
                         eval_json, jobs);
    }
    if (features->parsed()) {
      return CmdFeatures(feat_input, feat_format, feat_kind, feat_out, jobs);
    }
    if (decode->parsed()) {
      std::optional<double> merge;
      if (merge_opt->count() > 0) merge = merge_deg;
      return CmdDecode(dec_input, n_tracks, n_tracks_opt->count() > 0,
                       dec_threshold, merge, dec_out, jobs);
    }
    if (synth->parsed()) {
      if (noise_opt->count() > 0) scene_cfg.noise_level_db = noise_db;
      if (!weights_csv.empty()) {
        std::stringstream ss(weights_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
          scene_cfg.class_weights.push_back(std::stod(item));
        }
      }
      return CmdSynth(srir_dir, events_dir, scene_cfg, fold, synth_out, jobs);
    }
    if (stats->parsed()) {
      return CmdStats(annot_dir, stats_json);
    }
  } catch (const seld::SeldError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == seld::ErrorKind::kInternal ? kExitInternal : kExitInput;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
