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

#include <cmath>
#include <cstddef>

namespace gazetse {

// Audio/video/gaze clock constants shared by every module.
inline constexpr int kSampleRate = 16000;
inline constexpr int kVideoFps = 25;
inline constexpr double kGazeRate = 120.0;
inline constexpr std::size_t kSamplesPerVideoFrame = kSampleRate / kVideoFps;
inline constexpr std::size_t kDefaultHop = 128;
inline constexpr std::size_t kHopsPerVideoFrame = kSamplesPerVideoFrame / kDefaultHop;
inline constexpr double kDefaultSwitchGapSeconds = 0.48;

static_assert(kSamplesPerVideoFrame == 640);
static_assert(kHopsPerVideoFrame * kDefaultHop == kSamplesPerVideoFrame);
static_assert(kHopsPerVideoFrame == 5);

// Index of the window [f/rate, (f+1)/rate) containing time t. The small slack
// keeps timestamps generated as k/rate2 on the intended side of a boundary.
inline std::size_t window_index(double t, double rate) {
  return static_cast<std::size_t>(std::floor(t * rate + 1e-9));
}

// Number of whole frames in `duration` seconds at `rate`, tolerant to the
// rounding of products such as 0.04 * 25.
inline std::size_t whole_frames(double duration, double rate) {
  return static_cast<std::size_t>(std::floor(duration * rate + 1e-9));
}

// Video frames needed to cover `samples` audio samples.
inline std::size_t video_frames_covering(std::size_t samples) {
  return (samples + kSamplesPerVideoFrame - 1) / kSamplesPerVideoFrame;
}

}  // namespace gazetse
