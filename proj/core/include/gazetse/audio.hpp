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
#include <vector>

#include "gazetse/alignment.hpp"

namespace gazetse {

/// Mono waveform with real amplitudes.
struct Waveform {
  std::vector<double> samples;
  int rate = kSampleRate;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  double duration() const { return static_cast<double>(samples.size()) / rate; }

  friend bool operator==(const Waveform&, const Waveform&) = default;
};

inline double clip_unit(double v) { return v < -1.0 ? -1.0 : (v > 1.0 ? 1.0 : v); }

double mean_square(const Waveform& x);
double peak_abs(const Waveform& x);

Waveform trim_or_pad(const Waveform& x, std::size_t length);

/// Equal-gain two-talker mix. The interferer is trimmed or zero-padded to the
/// target length and clipped to [-1, 1], then added to the target and the sum
/// is clipped again.
Waveform mix_equal_gain(const Waveform& target, const Waveform& interferer);

/// Adds `noise` (trimmed to |x|) scaled so the mean-square ratio of x to the
/// scaled noise is snr_db, then clips.
Waveform add_noise_snr(const Waveform& x, const Waveform& noise, double snr_db);

/// Number of samples in a switch gap. Throws unless gap * rate rounds to a
/// whole number of 640-sample video frames.
std::size_t switch_gap_samples(double gap_seconds, int rate = kSampleRate);

/// mix ++ silence(gap) ++ mix.
Waveform build_switch_mixture(const Waveform& mix, double gap_seconds = kDefaultSwitchGapSeconds);

/// clean_a ++ silence(gap) ++ clean_b: the reference when attention moves from
/// A to B across the gap.
Waveform build_switch_reference(const Waveform& clean_a, const Waveform& clean_b,
                                double gap_seconds = kDefaultSwitchGapSeconds);

}  // namespace gazetse
