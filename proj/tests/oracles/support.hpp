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
#include <cstdint>
#include <filesystem>
#include <numbers>
#include <string>
#include <vector>

#include "gazetse/audio.hpp"
#include "gazetse/records.hpp"
#include "gazetse/rng.hpp"
#include "gazetse/synth.hpp"
#include "gazetse/wav.hpp"

namespace gazetse::testing {

inline Waveform white_noise(std::size_t n, std::uint64_t seed, double sigma = 0.1) {
  Rng rng(seed);
  Waveform w;
  w.samples.resize(n);
  for (double& v : w.samples) v = sigma * rng.normal();
  return w;
}

inline Waveform tone(std::size_t n, double freq, double amp = 0.5, double phase = 0.0) {
  Waveform w;
  w.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    w.samples[i] = amp * std::cos(2.0 * std::numbers::pi * freq * static_cast<double>(i) /
                                      w.rate + phase);
  return w;
}

/// Tone switched on only inside [begin, end) samples.
inline Waveform gated_tone(std::size_t n, double freq, std::size_t begin, std::size_t end,
                           double amp = 0.3) {
  Waveform w = tone(n, freq, amp);
  for (std::size_t i = 0; i < n; ++i)
    if (i < begin || i >= end) w.samples[i] = 0.0;
  return w;
}

/// Fresh, empty directory under the build tree.
inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::path(GAZETSE_TEST_TMP) / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

/// Writes n synthetic utterances from three speakers under dir.
inline std::vector<UtteranceRecord> write_corpus(const std::filesystem::path& dir, int n,
                                                 double base_duration = 1.0) {
  std::vector<UtteranceRecord> out;
  std::filesystem::create_directories(dir);
  for (int i = 0; i < n; ++i) {
    const int spk = i % 3;
    const double dur = base_duration + 0.13 * i;
    const auto w = synth_voice(random_voice(static_cast<std::uint64_t>(spk), dur), 100 + i);
    const auto p = dir / ("u" + std::to_string(i) + ".wav");
    write_wav(p, w);
    out.push_back({"u" + std::to_string(i), "spk" + std::to_string(spk), p, w.duration()});
  }
  return out;
}

}  // namespace gazetse::testing
