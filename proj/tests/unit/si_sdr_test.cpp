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

#include <gtest/gtest.h>

#include <cmath>

#include "gazetse/error.hpp"
#include "gazetse/metrics.hpp"
#include "gazetse/rng.hpp"
#include "oracles/brute_force.hpp"
#include "oracles/support.hpp"

namespace gazetse {
namespace {

Waveform wave(std::vector<double> v) {
  Waveform w;
  w.samples = std::move(v);
  return w;
}

TEST(SiSdr, HandExample) {
  // alpha = 1.5, 10 log10(4.5 / 1.5).
  EXPECT_NEAR(si_sdr(wave({1, 0, -1}), wave({1, 1, -2})), 10.0 * std::log10(3.0), 1e-12);
  EXPECT_NEAR(si_sdr(wave({1, 0, -1}), wave({1, 1, -2})), 4.771, 1e-3);
}

TEST(SiSdr, PerfectEstimateIsInfinite) {
  const auto s = testing::white_noise(1000, 1);
  EXPECT_EQ(si_sdr(s, s), std::numeric_limits<double>::infinity());
  EXPECT_EQ(si_sdr(wave({1, 0, -1}), wave({2, 0, -2})), std::numeric_limits<double>::infinity());
}

TEST(SiSdr, MeanRemoval) {
  // A DC offset on either side does not matter.
  const auto s = testing::white_noise(500, 2);
  const auto e = testing::white_noise(500, 3);
  Waveform s2 = s, e2 = e;
  for (double& v : s2.samples) v += 0.7;
  for (double& v : e2.samples) v -= 0.3;
  EXPECT_NEAR(si_sdr(s, e), si_sdr(s2, e2), 1e-9);
}

TEST(SiSdr, Errors) {
  EXPECT_THROW(si_sdr(wave({1, 2}), wave({1, 2, 3})), Error);
  EXPECT_THROW(si_sdr(wave({0.5, 0.5, 0.5}), wave({1, 2, 3})), Error);
  EXPECT_THROW(si_sdr(wave({}), wave({})), Error);
}

TEST(SiSdr, ScaleInvariance) {
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const auto s = testing::white_noise(800, 10 + i);
    auto e = testing::white_noise(800, 500 + i);
    for (std::size_t k = 0; k < e.size(); ++k) e.samples[k] += 0.8 * s.samples[k];
    const double base = si_sdr(s, e);
    for (double scale : {1e-3, 0.01, 0.37, 1.0, 42.0, 1e3}) {
      Waveform es = e;
      for (double& v : es.samples) v *= scale;
      EXPECT_NEAR(si_sdr(s, es), base, 1e-9) << scale;
    }
    (void)rng;
  }
}

TEST(SiSdr, AgreesWithDirectFormula) {
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const auto n = static_cast<std::size_t>(rng.uniform(3, 400));
    const auto s = testing::white_noise(n, 2000 + i);
    auto e = testing::white_noise(n, 9000 + i, rng.uniform(0.01, 1.0));
    const double mix = rng.uniform(-2, 2);
    for (std::size_t k = 0; k < n; ++k) e.samples[k] += mix * s.samples[k];
    const long double want = oracle::si_sdr_direct(s.samples, e.samples);
    EXPECT_NEAR(si_sdr(s, e), static_cast<double>(want), 1e-9);
  }
}

TEST(SiSdr, DecreasesWithNoise) {
  const auto s = testing::white_noise(16000, 7);
  const auto noise = testing::white_noise(16000, 8);
  double prev = INFINITY;
  for (double snr : {20.0, 10.0, 5.0, 0.0, -5.0, -10.0}) {
    const double v = si_sdr(s, add_noise_snr(s, noise, snr));
    EXPECT_LT(v, prev);
    EXPECT_NEAR(v, snr, 0.5);
    prev = v;
  }
}

}  // namespace
}  // namespace gazetse
