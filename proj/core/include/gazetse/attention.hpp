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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gazetse/gaze.hpp"
#include "gazetse/geometry.hpp"
#include "gazetse/scene.hpp"

namespace gazetse {

/// Attended track per video frame; nullopt where nothing has been selected yet.
struct SelectionTrace {
  std::vector<std::optional<std::size_t>> per_frame;
  double fps = kVideoFps;

  std::size_t size() const { return per_frame.size(); }
  friend bool operator==(const SelectionTrace&, const SelectionTrace&) = default;
};

/// Per-video-frame gaze: coordinate-wise median of the valid samples whose
/// timestamps fall in [f/fps, (f+1)/fps). Empty windows carry the previous
/// frame's value; frames before the first valid sample are nullopt.
std::vector<std::optional<Point2D>> resample_gaze(const GazeTrace& trace, double fps,
                                                  std::size_t n_frames);

/// Runs select_target on every frame of the scene. Frames with no gaze or no
/// selection hold the previous frame's decision.
SelectionTrace track_attention(const Scene& scene, const AttentionConfig& cfg);

/// Commits a switch to a new track only after it has been selected for k
/// consecutive frames. Dropping to nullopt is debounced the same way, while
/// leaving nullopt commits immediately. k = 1 is the identity.
SelectionTrace debounce(const SelectionTrace& trace, std::size_t k);

/// One "frame_index,track_id" row per frame, -1 for no selection.
std::string selection_to_text(const SelectionTrace& trace);
SelectionTrace selection_from_text(std::string_view text, double fps = kVideoFps);

}  // namespace gazetse
