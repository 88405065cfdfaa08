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

#include "gazetse/audio.hpp"

namespace gazetse {

/// Parameters of a synthetic voiced "utterance": a glottal-like harmonic
/// series with a wandering pitch, two formant resonances, and a syllabic
/// on/off envelope. Enough spectral and temporal structure for masking and
/// intelligibility metrics to behave as they do on speech.
struct VoiceParams {
  double duration = 3.0;   // seconds
  double f0 = 140.0;       // mean pitch, Hz
  double f0_jitter = 0.08; // relative pitch excursion
  double formant1 = 600.0;
  double formant2 = 1700.0;
  double syllable_rate = 4.0;  // syllables per second
  double rms = 0.1;
  double breath_noise = 0.02;  // relative level of aspiration noise
};

Waveform synth_voice(const VoiceParams& params, std::uint64_t seed, int rate = kSampleRate);

/// Draws a speaker's voice parameters (pitch and formants) from the seed.
VoiceParams random_voice(std::uint64_t speaker_seed, double duration);

}  // namespace gazetse
