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

#include "gazetse/audio.hpp"
#include "gazetse/metrics.hpp"
#include "gazetse/synth.hpp"

namespace {

struct Pair {
  gazetse::Waveform clean, noisy;
};

Pair make_pair(double seconds) {
  const auto a = gazetse::synth_voice(gazetse::random_voice(5, seconds), 5);
  const auto b = gazetse::synth_voice(gazetse::random_voice(6, seconds), 6);
  return {a, gazetse::mix_equal_gain(a, b)};
}

void BM_SiSdr(benchmark::State& state) {
  const auto p = make_pair(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gazetse::si_sdr(p.clean, p.noisy));
}
BENCHMARK(BM_SiSdr)->Arg(1)->Arg(4);

void BM_Stoi(benchmark::State& state) {
  const auto p = make_pair(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gazetse::stoi(p.clean, p.noisy));
}
BENCHMARK(BM_Stoi)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
