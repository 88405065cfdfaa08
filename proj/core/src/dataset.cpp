// Copyright (c) 2026 The gazetse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gazetse/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <optional>

#include "gazetse/audio.hpp"
#include "gazetse/error.hpp"
#include "gazetse/parallel.hpp"
#include "gazetse/rng.hpp"
#include "gazetse/wav.hpp"

namespace gazetse {

namespace fs = std::filesystem;

Pairing pair_utterances(std::span<const UtteranceRecord> records) {
  std::vector<UtteranceRecord> sorted(records.begin(), records.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.duration != b.duration) return a.duration < b.duration;
    return a.id < b.id;
  });
  const std::size_t n = sorted.size();
  std::vector<bool> used(n, false);
  std::vector<std::pair<std::size_t, std::size_t>> base;
  Pairing out;

  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) continue;
    std::optional<std::size_t> partner;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!used[j] && sorted[j].speaker_id != sorted[i].speaker_id) {
        partner = j;
        break;
      }
    }
    if (partner) {
      used[i] = used[*partner] = true;
      base.emplace_back(i, *partner);
      continue;
    }
    // Leftover: reuse the closest-duration record of another speaker.
    double best_gap = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || sorted[j].speaker_id == sorted[i].speaker_id) continue;
      const double gap = std::abs(sorted[j].duration - sorted[i].duration);
      if (gap < best_gap) {
        best_gap = gap;
        partner = j;
      }
    }
    used[i] = true;
    if (partner) {
      base.emplace_back(i, *partner);
    } else {
      out.dropped.push_back(sorted[i].id);
    }
  }
  if (base.empty()) throw Error("pair_utterances: no pair of records from distinct speakers");

  for (const auto& [a, b] : base) {
    out.pairs.push_back({sorted[a], sorted[b]});
    out.pairs.push_back({sorted[b], sorted[a]});
  }
  return out;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finaliser over (seed, index).
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '-' || c == '_' || c == '.';
    out += ok ? c : '_';
  }
  return out;
}

Waveform load_pipeline_audio(const UtteranceRecord& u) {
  Waveform w = read_wav(u.audio_path);
  if (w.rate != kSampleRate)
    throw DataError(u.audio_path.string() + ": expected 16000 Hz audio, found " +
                    std::to_string(w.rate));
  if (w.empty()) throw DataError(u.audio_path.string() + ": no samples");
  return w;
}

}  // namespace

BuildResult build_dataset(std::span<const UtteranceRecord> records, const fs::path& out_dir,
                          const BuildOptions& options) {
  if (!(options.switch_fraction >= 0.0 && options.switch_fraction <= 1.0))
    throw Error("switch_fraction must lie in [0, 1]");
  const std::size_t gap = switch_gap_samples(options.gap_seconds);
  const Pairing pairing = pair_utterances(records);
  for (const auto& id : pairing.dropped)
    std::cerr << "warning: utterance " << id << " has no distinct-speaker partner; dropped\n";

  std::error_code ec;
  fs::create_directories(out_dir / "audio", ec);
  if (options.with_scenes) fs::create_directories(out_dir / "scenes", ec);
  if (ec) throw DataError("cannot create " + out_dir.string() + ": " + ec.message());

  // Switch decisions are drawn sequentially so they do not depend on scheduling.
  Rng switch_rng(options.seed);
  std::vector<bool> is_switch(pairing.pairs.size());
  for (std::size_t i = 0; i < is_switch.size(); ++i)
    is_switch[i] = switch_rng.uniform() < options.switch_fraction;

  std::vector<std::optional<MixtureRecord>> built(pairing.pairs.size());
  std::vector<std::string> errors(pairing.pairs.size());
  parallel_for(pairing.pairs.size(), options.jobs, [&](std::size_t i) {
    const DirectedPair& pair = pairing.pairs[i];
    char prefix[16];
    std::snprintf(prefix, sizeof prefix, "m%05zu", i);
    MixtureRecord rec;
    rec.id = std::string(prefix) + "_" + sanitize(pair.target.id) + "_" +
             sanitize(pair.interferer.id) + (is_switch[i] ? "_sw" : "");
    rec.target = pair.target;
    rec.interferer = pair.interferer;
    try {
      const Waveform tgt = load_pipeline_audio(pair.target);
      const Waveform intf = load_pipeline_audio(pair.interferer);
      const std::size_t len = tgt.size();
      Waveform fitted = trim_or_pad(intf, len);
      for (double& v : fitted.samples) v = clip_unit(v);
      Waveform mixture = mix_equal_gain(tgt, intf);
      Waveform reference = tgt;
      Waveform src0 = tgt;
      Waveform src1 = fitted;

      SceneConfig scene_cfg = options.scene;
      if (is_switch[i]) {
        mixture = build_switch_mixture(mixture, options.gap_seconds);
        reference = build_switch_reference(tgt, fitted, options.gap_seconds);
        src0 = build_switch_mixture(tgt, options.gap_seconds);
        src1 = build_switch_mixture(fitted, options.gap_seconds);
        if (mixture.size() != 2 * len + gap || reference.size() != mixture.size() ||
            gap % kSamplesPerVideoFrame != 0)
          throw Error("switch build violated the frame alignment contract");
        scene_cfg.switch_time = (static_cast<double>(len) + 0.5 * static_cast<double>(gap)) /
                                kSampleRate;
        rec.switch_info = SwitchInfo{options.gap_seconds, 0};
      } else {
        scene_cfg.switch_time.reset();
      }
      scene_cfg.duration = static_cast<double>(video_frames_covering(mixture.size())) / kVideoFps;
      scene_cfg.initial_target = 0;
      scene_cfg.seed = mix_seed(options.seed, i);
      if (rec.switch_info) rec.switch_info->switch_frame = *scene_cfg.switch_frame();

      const fs::path audio = out_dir / "audio";
      rec.mixture_path = audio / (rec.id + "_mix.wav");
      rec.reference_path = audio / (rec.id + "_ref.wav");
      rec.source_paths = {audio / (rec.id + "_src0.wav"), audio / (rec.id + "_src1.wav")};
      write_wav(rec.mixture_path, mixture);
      write_wav(rec.reference_path, reference);
      write_wav(rec.source_paths[0], src0);
      write_wav(rec.source_paths[1], src1);
      if (options.with_scenes) {
        rec.scene_ref = out_dir / "scenes" / (rec.id + ".scene.json");
        save_scene(generate_scene(scene_cfg), *rec.scene_ref);
      }
      built[i] = std::move(rec);
    } catch (const std::exception& e) {
      errors[i] = rec.id + ": " + e.what();
    }
  });

  BuildResult result;
  result.dropped = pairing.dropped;
  for (std::size_t i = 0; i < built.size(); ++i) {
    if (built[i]) {
      result.records.push_back(std::move(*built[i]));
    } else {
      result.errors.push_back(errors[i]);
    }
  }
  if (result.records.empty()) {
    std::string msg = "dataset build produced no records";
    for (const auto& e : result.errors) msg += "\n  " + e;
    throw DataError(msg);
  }
  result.manifest_path = out_dir / "manifest.json";
  write_manifest(result.manifest_path, result.records, options);
  return result;
}

}  // namespace gazetse
