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
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gazetse/gaze.hpp"
#include "gazetse/geometry.hpp"

namespace gazetse {

struct SceneConfig {
  int frame_width = 1280;
  int frame_height = 720;
  double fps = kVideoFps;  // fixed; validate() rejects anything else
  double duration = 4.0;   // seconds
  int n_speakers = 2;
  double face_size_fraction = 0.25;
  double jitter_sigma = 8.0;      // pixels
  double box_motion_sigma = 0.0;  // pixels per frame
  std::optional<double> switch_time;
  int initial_target = 0;
  std::uint64_t seed = 0;

  void validate() const;
  std::size_t frame_count() const { return whole_frames(duration, fps); }
  std::size_t gaze_sample_count() const { return whole_frames(duration, kGazeRate); }
  double face_side() const { return face_size_fraction * frame_height; }
  /// Frame index at which attention flips, if a switch is configured.
  std::optional<std::size_t> switch_frame() const;
};

/// A synthetic multi-person video: one box track per speaker, a 120 Hz gaze
/// trace, and the ground-truth attended track per video frame.
struct Scene {
  SceneConfig config;
  std::vector<std::vector<BoundingBox>> tracks;  // [track][frame]
  GazeTrace gaze;
  std::vector<std::size_t> attended_truth;  // [frame]

  std::size_t frame_count() const { return attended_truth.size(); }
  std::vector<BoundingBox> boxes_at(std::size_t frame) const;
};

/// Builds a scene from its config. Random draws happen in a fixed order:
/// box drift for track 0 frames 0..F-1, then track 1, ..., then gaze jitter
/// (x then y) per gaze sample. Identical configs give bit-identical scenes.
Scene generate_scene(const SceneConfig& cfg);

std::string scene_to_manifest(const Scene& scene);
Scene scene_from_manifest(std::string_view text);
void save_scene(const Scene& scene, const std::filesystem::path& path);
Scene load_scene(const std::filesystem::path& path);

}  // namespace gazetse
