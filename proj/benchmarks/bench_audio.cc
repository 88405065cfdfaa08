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

#include <benchmark/benchmark.h>

#include <vector>

#include "gazetse/enhance.hpp"
#include "gazetse/stft.hpp"
#include "gazetse/synth.hpp"

namespace {

gazetse::Waveform voice(std::uint64_t seed, double seconds) {
  return gazetse::synth_voice(gazetse::random_voice(seed, seconds), seed);
}

void BM_Stft(benchmark::State& state) {
  const auto x = voice(1, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gazetse::stft(x));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(x.size()));
}
BENCHMARK(BM_Stft)->Arg(1)->Arg(4);

void BM_StftRoundTrip(benchmark::State& state) {
  const auto x = voice(2, 4.0);
  for (auto _ : state) benchmark::DoNotOptimize(gazetse::istft(gazetse::stft(x)));
}
BENCHMARK(BM_StftRoundTrip);

void BM_FixedTargetEnhance(benchmark::State& state) {
  const auto a = voice(3, 4.0), b = voice(4, 4.0);
  const auto mix = gazetse::mix_equal_gain(a, b);
  const std::vector<gazetse::Waveform> sources{a, b};
  for (auto _ : state) benchmark::DoNotOptimize(gazetse::fixed_target_enhance(mix, sources, 0));
}
BENCHMARK(BM_FixedTargetEnhance);

}  // namespace
