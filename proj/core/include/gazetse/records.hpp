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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace gazetse {

struct UtteranceRecord {
  std::string id;
  std::string speaker_id;
  std::filesystem::path audio_path;
  double duration = 0.0;  // seconds

  friend bool operator==(const UtteranceRecord&, const UtteranceRecord&) = default;
};

struct SwitchInfo {
  double gap_seconds = 0.0;
  std::size_t switch_frame = 0;  // first video frame attending the second talker

  friend bool operator==(const SwitchInfo&, const SwitchInfo&) = default;
};

/// One target/interferer mixture. Track 0 of the scene and source 0 belong to
/// the target talker, track 1 and source 1 to the interferer. In switch
/// records the reference follows the target before the gap and the
/// interferer after it.
struct MixtureRecord {
  std::string id;
  UtteranceRecord target;
  UtteranceRecord interferer;
  std::filesystem::path mixture_path;
  std::filesystem::path reference_path;
  std::vector<std::filesystem::path> source_paths;  // clean per-talker signals
  std::optional<std::filesystem::path> scene_ref;
  std::optional<SwitchInfo> switch_info;

  friend bool operator==(const MixtureRecord&, const MixtureRecord&) = default;
};

}  // namespace gazetse
