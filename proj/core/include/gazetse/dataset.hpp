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

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "gazetse/alignment.hpp"
#include "gazetse/records.hpp"
#include "gazetse/scene.hpp"

namespace gazetse {

struct DirectedPair {
  UtteranceRecord target;
  UtteranceRecord interferer;
};

struct Pairing {
  std::vector<DirectedPair> pairs;
  std::vector<std::string> dropped;  // ids that found no distinct-speaker partner
};

/// Similar-length pairing across distinct speakers. Records are sorted by
/// (duration, id); walking that order, each unused record is matched with the
/// nearest later unused record of another speaker. A record left without
/// such a partner is matched with the closest-duration record of another
/// speaker that is already paired. Every base pair (a, b) is emitted as
/// (a, b) and (b, a). Throws when no distinct-speaker pair exists.
Pairing pair_utterances(std::span<const UtteranceRecord> records);

struct BuildOptions {
  std::uint64_t seed = 0;
  bool with_scenes = true;
  double switch_fraction = 0.0;
  double gap_seconds = kDefaultSwitchGapSeconds;
  SceneConfig scene;  // template; duration, seed and switch are set per record
  std::size_t jobs = 0;
};

struct BuildResult {
  std::vector<MixtureRecord> records;
  std::vector<std::string> errors;
  std::vector<std::string> dropped;
  std::filesystem::path manifest_path;
};

/// Mixes every directed pair, writes mixture/reference/source WAVs (and scene
/// manifests) under out_dir, and writes out_dir/manifest.json. Per-record
/// failures are collected; throws only when no record could be built.
BuildResult build_dataset(std::span<const UtteranceRecord> records,
                          const std::filesystem::path& out_dir, const BuildOptions& options);

// Utterance lists: CSV with header id,speaker_id,audio_path,duration. Relative
// audio paths are resolved against the CSV's directory.
std::vector<UtteranceRecord> read_utterance_csv(const std::filesystem::path& path);
void write_utterance_csv(const std::filesystem::path& path,
                         std::span<const UtteranceRecord> records);

// Dataset manifests (JSON). Paths are stored relative to the manifest's
// directory and resolved back to it on load.
void write_manifest(const std::filesystem::path& path, std::span<const MixtureRecord> records,
                    const BuildOptions& options);
std::vector<MixtureRecord> read_manifest(const std::filesystem::path& path);

}  // namespace gazetse
