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

#include "gazetse/attention.hpp"

#include <gtest/gtest.h>

#include <set>

#include "gazetse/error.hpp"
#include "gazetse/rng.hpp"

namespace gazetse {
namespace {

using Sel = std::optional<std::size_t>;
constexpr Sel A = 0, B = 1, C = 2;
constexpr Sel None = std::nullopt;

SelectionTrace make_trace(std::vector<Sel> v) {
  SelectionTrace t;
  t.per_frame = std::move(v);
  return t;
}

SelectionTrace random_trace(Rng& rng, std::size_t n, bool with_none) {
  SelectionTrace t;
  Sel cur = A;
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.uniform() < 0.3) {
      const int pick = static_cast<int>(rng.uniform(0.0, with_none ? 4.0 : 3.0));
      cur = pick == 3 ? None : Sel(static_cast<std::size_t>(pick));
    }
    t.per_frame.push_back(cur);
  }
  return t;
}

// Two static faces side by side; gaze supplied by the caller.
Scene two_face_scene(std::size_t frames) {
  Scene s;
  s.config.duration = static_cast<double>(frames) / kVideoFps;
  s.config.jitter_sigma = 0.0;
  s.tracks.assign(2, {});
  for (std::size_t f = 0; f < frames; ++f) {
    s.tracks[0].emplace_back(230, 270, 410, 450);
    s.tracks[1].emplace_back(870, 270, 1050, 450);
  }
  s.attended_truth.assign(frames, 0);
  return s;
}

void add_gaze(Scene& s, std::size_t frames, auto point_for_frame, auto valid_for_frame) {
  const std::size_t n = whole_frames(static_cast<double>(frames) / kVideoFps, kGazeRate);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) / kGazeRate;
    const std::size_t f = window_index(t, kVideoFps);
    s.gaze.samples.push_back(GazeSample{t, point_for_frame(f), valid_for_frame(f)});
  }
}

TEST(ResampleGaze, MedianPerWindow) {
  GazeTrace g;
  // Frame 0 window is [0, 0.04): one outlier among five samples.
  const double xs[] = {10, 11, 500, 12, 13};
  for (int i = 0; i < 5; ++i) g.samples.push_back({i / 120.0, {xs[i], 2.0 * xs[i]}, true});
  const auto r = resample_gaze(g, kVideoFps, 1);
  ASSERT_TRUE(r[0]);
  EXPECT_EQ(r[0]->x, 12.0);
  EXPECT_EQ(r[0]->y, 24.0);
}

TEST(ResampleGaze, EvenCountAveragesMiddlePair) {
  GazeTrace g;
  g.samples = {{0.0, {1, 1}, true}, {0.01, {3, 5}, true}, {0.02, {100, 100}, false}};
  const auto r = resample_gaze(g, kVideoFps, 1);
  EXPECT_EQ(*r[0], (Point2D{2, 3}));
}

TEST(ResampleGaze, CarriesForwardAndLeadingNone) {
  GazeTrace g;
  g.samples = {{0.05, {7, 8}, true}, {0.09, {1, 1}, false}};
  const auto r = resample_gaze(g, kVideoFps, 4);
  EXPECT_FALSE(r[0]);
  EXPECT_EQ(*r[1], (Point2D{7, 8}));
  EXPECT_EQ(*r[2], (Point2D{7, 8}));
  EXPECT_EQ(*r[3], (Point2D{7, 8}));
}

TEST(ResampleGaze, RejectsBadTimestamps) {
  GazeTrace g;
  g.samples = {{0.1, {0, 0}, true}, {0.1, {0, 0}, true}};
  EXPECT_THROW(resample_gaze(g, kVideoFps, 3), Error);
  g.samples = {{-0.1, {0, 0}, true}};
  EXPECT_THROW(resample_gaze(g, kVideoFps, 3), Error);
  g.samples = {{0.0, {0, 0}, true}};
  EXPECT_THROW(resample_gaze(g, 0.0, 3), Error);
}

TEST(TrackAttention, ConstantFixation) {
  Scene s = two_face_scene(100);
  add_gaze(s, 100, [](std::size_t) { return Point2D{320, 360}; }, [](std::size_t) { return true; });
  const auto t = track_attention(s, {});
  ASSERT_EQ(t.size(), 100u);
  for (auto x : t.per_frame) EXPECT_EQ(x, A);
}

TEST(TrackAttention, JumpAtFrameFifty) {
  Scene s = two_face_scene(100);
  add_gaze(
      s, 100, [](std::size_t f) { return f < 50 ? Point2D{320, 360} : Point2D{960, 360}; },
      [](std::size_t) { return true; });
  const auto t = track_attention(s, {});
  for (std::size_t f = 0; f < 100; ++f) EXPECT_EQ(t.per_frame[f], f < 50 ? A : B) << f;
}

TEST(TrackAttention, DropoutHoldsPrevious) {
  Scene s = two_face_scene(40);
  // Invalid samples during 10..19 point at B; they must be ignored.
  add_gaze(
      s, 40, [](std::size_t f) { return f >= 10 && f < 20 ? Point2D{960, 360} : Point2D{320, 360}; },
      [](std::size_t f) { return f < 10 || f >= 20; });
  const auto t = track_attention(s, {});
  for (auto x : t.per_frame) EXPECT_EQ(x, A);
}

TEST(TrackAttention, BelowThresholdHolds) {
  Scene s = two_face_scene(30);
  add_gaze(
      s, 30, [](std::size_t f) { return f < 10 ? Point2D{960, 360} : Point2D{1270, 710}; },
      [](std::size_t) { return true; });
  AttentionConfig cfg;
  cfg.min_score_tau = 0.5;
  ASSERT_LT(match_score({1270, 710}, s.tracks[1][0], cfg), 0.5);
  const auto t = track_attention(s, cfg);
  for (auto x : t.per_frame) EXPECT_EQ(x, B);
}

TEST(TrackAttention, NoGazeMeansNone) {
  Scene s = two_face_scene(10);
  const auto t = track_attention(s, {});
  ASSERT_EQ(t.size(), 10u);
  for (auto x : t.per_frame) EXPECT_EQ(x, None);
}

TEST(TrackAttention, ZeroJitterFollowsTruth) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SceneConfig cfg;
    cfg.seed = seed;
    cfg.jitter_sigma = 0.0;
    cfg.box_motion_sigma = 2.0;
    cfg.n_speakers = 2 + static_cast<int>(seed % 3);
    cfg.switch_time = 1.5;
    const Scene s = generate_scene(cfg);
    const auto t = track_attention(s, {});
    ASSERT_EQ(t.size(), s.frame_count());
    for (std::size_t f = 0; f < t.size(); ++f) EXPECT_EQ(t.per_frame[f], s.attended_truth[f]);
  }
}

TEST(TrackAttention, HoldNeverInventsIds) {
  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    Scene s = two_face_scene(50);
    add_gaze(
        s, 50,
        [&](std::size_t) { return Point2D{rng.uniform(-50, 1330), rng.uniform(-50, 770)}; },
        [&](std::size_t) { return rng.uniform() < 0.7; });
    const auto gaze = resample_gaze(s.gaze, kVideoFps, 50);
    const auto t = track_attention(s, {});
    std::set<std::size_t> seen;
    for (std::size_t f = 0; f < 50; ++f) {
      if (gaze[f]) {
        if (auto raw = select_target(*gaze[f], s.boxes_at(f), {})) seen.insert(*raw);
      }
      if (t.per_frame[f]) {
        EXPECT_TRUE(seen.count(*t.per_frame[f])) << "frame " << f;
      }
    }
  }
}

TEST(Debounce, Examples) {
  EXPECT_EQ(debounce(make_trace({A, A, B, A, A, A}), 2).per_frame,
            (std::vector<Sel>{A, A, A, A, A, A}));
  EXPECT_EQ(debounce(make_trace({A, A, B, B, B}), 2).per_frame, (std::vector<Sel>{A, A, A, B, B}));
  EXPECT_EQ(debounce(make_trace({A, B, C, B, C, C, C}), 3).per_frame,
            (std::vector<Sel>{A, A, A, A, A, A, C}));
  // Leaving "none" is immediate; entering it is debounced.
  EXPECT_EQ(debounce(make_trace({None, None, B, None, B}), 2).per_frame,
            (std::vector<Sel>{None, None, B, B, B}));
  EXPECT_THROW(debounce(make_trace({A}), 0), Error);
  EXPECT_TRUE(debounce(make_trace({}), 3).per_frame.empty());
}

TEST(Debounce, KOneIsIdentity) {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const auto t = random_trace(rng, 60, true);
    EXPECT_EQ(debounce(t, 1), t);
  }
}

TEST(Debounce, LengthAndIdsPreserved) {
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    const auto t = random_trace(rng, 80, true);
    for (std::size_t k = 1; k <= 5; ++k) {
      const auto d = debounce(t, k);
      ASSERT_EQ(d.size(), t.size());
      for (std::size_t f = 0; f < d.size(); ++f) {
        if (!d.per_frame[f]) continue;
        bool seen = false;
        for (std::size_t g = 0; g <= f; ++g) seen |= t.per_frame[g] == d.per_frame[f];
        EXPECT_TRUE(seen);
      }
    }
  }
}

TEST(Debounce, CommittedRunsLastAtLeastK) {
  // Every committed id other than the first and last stays for >= k frames,
  // and each commit is backed by k consecutive raw frames ending there.
  Rng rng(10);
  for (int i = 0; i < 300; ++i) {
    const auto t = random_trace(rng, 120, false);
    for (std::size_t k = 2; k <= 4; ++k) {
      const auto d = debounce(t, k);
      std::vector<std::size_t> starts{0};
      for (std::size_t f = 1; f < d.size(); ++f)
        if (d.per_frame[f] != d.per_frame[f - 1]) starts.push_back(f);
      for (std::size_t r = 1; r + 1 < starts.size(); ++r)
        EXPECT_GE(starts[r + 1] - starts[r], k);
      for (std::size_t r = 1; r < starts.size(); ++r) {
        const std::size_t f = starts[r];
        ASSERT_GE(f + 1, k);
        for (std::size_t g = f + 1 - k; g <= f; ++g) EXPECT_EQ(t.per_frame[g], d.per_frame[f]);
      }
    }
  }
}

TEST(Debounce, FixedPointOnDebouncedSwitchSequence) {
  // Repeated debouncing can add delay but never changes which ids are visited.
  Rng rng(12);
  auto ids = [](const SelectionTrace& t) {
    std::vector<Sel> v;
    for (auto x : t.per_frame)
      if (v.empty() || v.back() != x) v.push_back(x);
    return v;
  };
  for (int i = 0; i < 200; ++i) {
    const auto t = random_trace(rng, 100, false);
    const auto once = debounce(t, 3);
    const auto twice = debounce(once, 3);
    const auto a = ids(once), b = ids(twice);
    ASSERT_LE(b.size(), a.size());
    EXPECT_TRUE(std::equal(b.begin(), b.end(), a.begin()));
  }
}

TEST(SelectionText, RoundTrip) {
  const auto t = make_trace({A, None, B, C});
  const auto text = selection_to_text(t);
  EXPECT_EQ(text, "0,0\n1,-1\n2,1\n3,2\n");
  EXPECT_EQ(selection_from_text(text), t);
  EXPECT_EQ(selection_from_text("0,1\r\n1,-1\r\n"), make_trace({B, None}));
}

TEST(SelectionText, RejectsMalformed) {
  EXPECT_THROW(selection_from_text("0,1\n2,1\n"), DataError);
  EXPECT_THROW(selection_from_text("0;1\n"), DataError);
  EXPECT_THROW(selection_from_text("0,-2\n"), DataError);
  EXPECT_THROW(selection_from_text("x,1\n"), DataError);
}

}  // namespace
}  // namespace gazetse
