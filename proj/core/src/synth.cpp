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

#include "gazetse/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "gazetse/error.hpp"
#include "gazetse/rng.hpp"

namespace gazetse {

namespace {

struct Syllable {
  std::size_t begin = 0;
  std::size_t end = 0;
  double f1 = 0.0;
  double f2 = 0.0;
};

double resonance(double f, double centre, double bandwidth) {
  const double u = (f - centre) / bandwidth;
  return 1.0 / (1.0 + u * u);
}

}  // namespace

Waveform synth_voice(const VoiceParams& p, std::uint64_t seed, int rate) {
  if (!(p.duration > 0.0) || !(p.f0 > 0.0) || !(p.rms > 0.0) || !(p.syllable_rate > 0.0) ||
      rate <= 0)
    throw Error("synth_voice: invalid voice parameters");
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  Rng rng(seed);
  const auto n = static_cast<std::size_t>(std::llround(p.duration * rate));
  const double fs = rate;

  // Syllable layout: lead-in silence, then voiced spans separated by pauses.
  std::vector<Syllable> syllables;
  std::size_t cursor = static_cast<std::size_t>(rng.uniform(0.05, 0.15) * fs);
  while (cursor < n) {
    const double len = rng.uniform(0.6, 1.0) / p.syllable_rate;
    Syllable s;
    s.begin = cursor;
    s.end = std::min(n, cursor + static_cast<std::size_t>(len * fs));
    s.f1 = p.formant1 * rng.uniform(0.75, 1.25);
    s.f2 = p.formant2 * rng.uniform(0.8, 1.2);
    syllables.push_back(s);
    cursor = s.end + static_cast<std::size_t>(rng.uniform(0.03, 0.12) * fs);
  }

  const double phi1 = rng.uniform(0.0, kTwoPi);
  const double phi2 = rng.uniform(0.0, kTwoPi);
  const double nyquist_guard = std::min(5000.0, 0.45 * fs);

  Waveform out;
  out.rate = rate;
  out.samples.assign(n, 0.0);
  double phase = 0.0;
  std::size_t si = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / fs;
    const double f0 = p.f0 * (1.0 + p.f0_jitter * (0.6 * std::sin(kTwoPi * 0.7 * t + phi1) +
                                                   0.4 * std::sin(kTwoPi * 1.9 * t + phi2)));
    phase += kTwoPi * f0 / fs;
    if (phase > kTwoPi * 1e6) phase = std::fmod(phase, kTwoPi);

    while (si < syllables.size() && syllables[si].end <= i) ++si;
    const double noise = rng.normal();
    if (si >= syllables.size() || i < syllables[si].begin) continue;
    const Syllable& s = syllables[si];
    const double span = static_cast<double>(s.end - s.begin);
    const double env = std::sin(std::numbers::pi * static_cast<double>(i - s.begin) / span);
    const double shaped = env * env;

    double v = 0.0;
    for (int h = 1; h * f0 < nyquist_guard; ++h) {
      const double fh = h * f0;
      const double gain = (0.15 + resonance(fh, s.f1, 90.0) + 0.7 * resonance(fh, s.f2, 140.0)) /
                          std::sqrt(static_cast<double>(h));
      v += gain * std::sin(h * phase);
    }
    out.samples[i] = shaped * (v + p.breath_noise * 10.0 * noise);
  }

  const double ms = mean_square(out);
  if (ms > 0.0) {
    const double g = p.rms / std::sqrt(ms);
    for (double& v : out.samples) v = clip_unit(v * g);
  }
  return out;
}

VoiceParams random_voice(std::uint64_t speaker_seed, double duration) {
  Rng rng(speaker_seed ^ 0x9e3779b97f4a7c15ULL);
  VoiceParams p;
  p.duration = duration;
  p.f0 = rng.uniform(90.0, 240.0);
  p.formant1 = rng.uniform(450.0, 800.0);
  p.formant2 = rng.uniform(1200.0, 2300.0);
  p.syllable_rate = rng.uniform(3.0, 5.0);
  return p;
}

}  // namespace gazetse
