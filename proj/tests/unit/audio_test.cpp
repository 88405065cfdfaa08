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

#include "gazetse/audio.hpp"

#include <gtest/gtest.h>

#include "gazetse/error.hpp"
#include "gazetse/metrics.hpp"
#include "gazetse/rng.hpp"
#include "gazetse/synth.hpp"
#include "oracles/support.hpp"

namespace gazetse {
namespace {

Waveform wave(std::vector<double> v) {
  Waveform w;
  w.samples = std::move(v);
  return w;
}

TEST(Alignment, Constants) {
  EXPECT_EQ(kSamplesPerVideoFrame, 640);
  EXPECT_EQ(kSamplesPerVideoFrame, kHopsPerVideoFrame * kDefaultHop);
  EXPECT_EQ(switch_gap_samples(kDefaultSwitchGapSeconds), 7680u);
  EXPECT_EQ(switch_gap_samples(kDefaultSwitchGapSeconds) / kSamplesPerVideoFrame, 12u);
}

TEST(TrimOrPad, Examples) {
  const Waveform x = wave({1, 2, 3, 4, 5});
  EXPECT_EQ(trim_or_pad(x, 3).samples, (std::vector<double>{1, 2, 3}));
  EXPECT_EQ(trim_or_pad(wave({1, 2, 3}), 5).samples, (std::vector<double>{1, 2, 3, 0, 0}));
  EXPECT_EQ(trim_or_pad(x, 5), x);
  EXPECT_TRUE(trim_or_pad(x, 0).empty());
}

TEST(TrimOrPad, RandomLengths) {
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<std::size_t>(rng.uniform(0, 300));
    const auto l = static_cast<std::size_t>(rng.uniform(0, 300));
    const auto x = testing::white_noise(n, i);
    const auto y = trim_or_pad(x, l);
    ASSERT_EQ(y.size(), l);
    for (std::size_t k = 0; k < l; ++k) EXPECT_EQ(y.samples[k], k < n ? x.samples[k] : 0.0);
  }
}

TEST(MixEqualGain, HandVectors) {
  EXPECT_EQ(mix_equal_gain(wave({0.8}), wave({0.5})).samples, (std::vector<double>{1.0}));
  EXPECT_EQ(mix_equal_gain(wave({0.2, -0.3}), wave({0.1, -0.1, 0.9})).samples,
            (std::vector<double>{0.2 + 0.1, -0.3 + -0.1}));
  // Interferer is clipped before summing: 2.0 -> 1.0, then -0.5 + 1.0.
  EXPECT_EQ(mix_equal_gain(wave({-0.5, 0.0}), wave({2.0})).samples,
            (std::vector<double>{0.5, 0.0}));
  EXPECT_EQ(mix_equal_gain(wave({-0.9, 1.7}), wave({-0.9, 0.0})).samples,
            (std::vector<double>{-1.0, 1.0}));
}

TEST(MixEqualGain, ZeroInterfererClipsTarget) {
  const auto t = wave({0.1, -1.5, 2.0});
  EXPECT_EQ(mix_equal_gain(t, wave({0, 0, 0})).samples, (std::vector<double>{0.1, -1.0, 1.0}));
}

TEST(MixEqualGain, RateMismatch) {
  Waveform a = wave({0.1});
  Waveform b = wave({0.1});
  b.rate = 8000;
  EXPECT_THROW(mix_equal_gain(a, b), Error);
}

TEST(MixEqualGain, BoundedAndCommutativeWithoutClipping) {
  Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 500));
    const auto a = testing::white_noise(n, 100 + i, 0.7);
    const auto b = testing::white_noise(n, 900 + i, 0.7);
    const auto y = mix_equal_gain(a, b);
    ASSERT_EQ(y.size(), n);
    EXPECT_LE(peak_abs(y), 1.0);

    const auto sa = testing::white_noise(n, 100 + i, 0.1);
    const auto sb = testing::white_noise(n, 900 + i, 0.1);
    EXPECT_EQ(mix_equal_gain(sa, sb), mix_equal_gain(sb, sa));
  }
}

TEST(AddNoiseSnr, ZeroDbPowerMatch) {
  const auto x = testing::white_noise(16000, 1, 0.05);
  const auto noise = testing::white_noise(20000, 2, 0.3);
  const auto y = add_noise_snr(x, noise, 0.0);
  ASSERT_EQ(y.size(), x.size());
  Waveform added = y;
  for (std::size_t n = 0; n < x.size(); ++n) added.samples[n] -= x.samples[n];
  EXPECT_NEAR(mean_square(added) / mean_square(x), 1.0, 1e-9);
}

TEST(AddNoiseSnr, HighSnrNearlyClean) {
  Waveform x = testing::white_noise(8000, 3, 1.0);
  Waveform noise = testing::white_noise(8000, 4, 1.0);
  for (double& v : x.samples) v = clip_unit(v) * 0.5;
  const auto y = add_noise_snr(x, noise, 60.0);
  const double scale = std::sqrt(mean_square(x) / mean_square(noise)) * 1e-3;
  double dev = 0.0;
  for (std::size_t n = 0; n < x.size(); ++n) dev = std::max(dev, std::abs(y.samples[n] - x.samples[n]));
  EXPECT_LE(dev, scale * peak_abs(noise) * (1 + 1e-9));
}

TEST(AddNoiseSnr, Errors) {
  const auto x = testing::white_noise(100, 1);
  EXPECT_THROW(add_noise_snr(x, wave(std::vector<double>(100, 0.0)), 0.0), Error);
  EXPECT_THROW(add_noise_snr(wave(std::vector<double>(100, 0.0)), x, 0.0), Error);
  EXPECT_THROW(add_noise_snr(x, testing::white_noise(50, 2), 0.0), Error);
}

TEST(AddNoiseSnr, OutputBounded) {
  const auto x = testing::white_noise(1000, 1, 0.9);
  const auto y = add_noise_snr(x, testing::white_noise(1000, 7, 1.0), -10.0);
  EXPECT_LE(peak_abs(y), 1.0);
}

TEST(SwitchMixture, Lengths) {
  const auto mix = testing::white_noise(16000, 5, 0.2);
  const auto s = build_switch_mixture(mix, 0.48);
  ASSERT_EQ(s.size(), 2 * 16000u + 7680u);
  for (std::size_t n = 0; n < 16000; ++n) {
    EXPECT_EQ(s.samples[n], mix.samples[n]);
    EXPECT_EQ(s.samples[n + 16000 + 7680], mix.samples[n]);
  }
  for (std::size_t n = 16000; n < 16000 + 7680; ++n) EXPECT_EQ(s.samples[n], 0.0);
  EXPECT_EQ(build_switch_mixture(mix, 0.0).size(), 32000u);
  EXPECT_EQ(build_switch_mixture(mix, 0.04).size(), 32640u);
}

TEST(SwitchMixture, MisalignedGapRejected) {
  const auto mix = testing::white_noise(100, 5);
  EXPECT_THROW(build_switch_mixture(mix, 0.03), Error);
  EXPECT_THROW(build_switch_mixture(mix, 0.5), Error);  // 8000 samples = 12.5 frames
  EXPECT_THROW(build_switch_mixture(mix, -0.04), Error);
}

TEST(SwitchMixture, Bounded) {
  Waveform mix = wave({1.5, -3.0, 0.2});
  for (double v : build_switch_mixture(mix, 0.04).samples) {
    EXPECT_LE(v, 1.0);
    EXPECT_GE(v, -1.0);
  }
}

TEST(SwitchReference, Contracts) {
  const auto a = testing::white_noise(3200, 1, 0.1);
  const auto b = testing::white_noise(3200, 2, 0.1);
  const auto r = build_switch_reference(a, b, 0.48);
  ASSERT_EQ(r.size(), 2 * 3200u + 7680u);
  EXPECT_EQ(r.samples[0], a.samples[0]);
  EXPECT_EQ(r.samples[3200 + 7680], b.samples[0]);
  EXPECT_EQ(build_switch_reference(a, a, 0.48), build_switch_mixture(a, 0.48));
  EXPECT_TRUE(std::isinf(si_sdr(r, r)));
  EXPECT_THROW(build_switch_reference(a, testing::white_noise(3199, 2), 0.48), Error);
}

TEST(Synth, DeterministicAndNormalised) {
  const auto p = random_voice(3, 1.5);
  const auto a = synth_voice(p, 11);
  const auto b = synth_voice(p, 11);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 24000u);
  EXPECT_NEAR(std::sqrt(mean_square(a)), p.rms, 1e-9);
  EXPECT_LE(peak_abs(a), 1.0);
  EXPECT_NE(synth_voice(p, 12), a);
  VoiceParams bad = p;
  bad.duration = -1;
  EXPECT_THROW(synth_voice(bad, 1), Error);
}

}  // namespace
}  // namespace gazetse
