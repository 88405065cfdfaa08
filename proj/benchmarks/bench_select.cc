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

#include "gazetse/attention.hpp"
#include "gazetse/geometry.hpp"
#include "gazetse/rng.hpp"
#include "gazetse/scene.hpp"

namespace {

void BM_SelectTarget(benchmark::State& state) {
  gazetse::Rng rng(1);
  const gazetse::AttentionConfig cfg;
  std::vector<gazetse::BoundingBox> boxes;
  for (int i = 0; i < state.range(0); ++i) {
    const double x = rng.uniform(0.0, 1000.0), y = rng.uniform(0.0, 500.0);
    boxes.emplace_back(x, y, x + 180.0, y + 180.0);
  }
  gazetse::Point2D g{640.0, 360.0};
  for (auto _ : state) {
    g.x = rng.uniform(0.0, 1280.0);
    benchmark::DoNotOptimize(gazetse::select_target(g, boxes, cfg));
  }
}
BENCHMARK(BM_SelectTarget)->Arg(2)->Arg(8)->Arg(32);

void BM_TrackAttention(benchmark::State& state) {
  gazetse::SceneConfig c;
  c.duration = 10.0;
  c.switch_time = 5.0;
  c.seed = 3;
  const auto scene = gazetse::generate_scene(c);
  for (auto _ : state) benchmark::DoNotOptimize(gazetse::track_attention(scene, {}));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(scene.frame_count()));
}
BENCHMARK(BM_TrackAttention);

}  // namespace
