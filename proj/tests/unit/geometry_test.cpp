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

#include "gazetse/geometry.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "gazetse/error.hpp"
#include "gazetse/rng.hpp"
#include "oracles/brute_force.hpp"

namespace gazetse {
namespace {

BoundingBox random_box(Rng& rng, double frame = 100.0) {
  const double x0 = rng.uniform(0.0, frame * 0.8);
  const double y0 = rng.uniform(0.0, frame * 0.8);
  return BoundingBox(x0, y0, x0 + rng.uniform(1.0, frame * 0.4), y0 + rng.uniform(1.0, frame * 0.4));
}

TEST(BoundingBox, RejectsInvalid) {
  EXPECT_THROW(BoundingBox(1, 0, 1, 2), Error);
  EXPECT_THROW(BoundingBox(0, 2, 1, 1), Error);
  EXPECT_THROW(BoundingBox(0, 0, INFINITY, 1), Error);
  EXPECT_THROW(BoundingBox(NAN, 0, 1, 1), Error);
}

TEST(Iou, IdentityDisjointAndOverlap) {
  const BoundingBox b(3.5, 1.25, 9.0, 7.0);
  EXPECT_EQ(iou(b, b), 1.0);
  EXPECT_EQ(iou(BoundingBox(0, 0, 1, 1), BoundingBox(2, 2, 3, 3)), 0.0);
  // Edge-sharing boxes have disjoint interiors.
  EXPECT_EQ(iou(BoundingBox(0, 0, 1, 1), BoundingBox(1, 0, 2, 1)), 0.0);
  EXPECT_NEAR(iou(BoundingBox(0, 0, 2, 2), BoundingBox(1, 1, 3, 3)), 1.0 / 7.0, 1e-15);
}

TEST(Iou, OverlapExampleMatchesGridCount) {
  const double grid = oracle::grid_iou({0, 0, 2, 2}, {1, 1, 3, 3}, 0.01);
  EXPECT_NEAR(grid, 1.0 / 7.0, 1e-3);
}

TEST(Iou, AxiomsOnRandomBoxes) {
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_box(rng), b = random_box(rng);
    const double v = iou(a, b);
    EXPECT_EQ(v, iou(b, a));
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
    EXPECT_EQ(iou(a, a), 1.0);
    if (a.x_max() <= b.x_min() || b.x_max() <= a.x_min() || a.y_max() <= b.y_min() ||
        b.y_max() <= a.y_min())
      EXPECT_EQ(v, 0.0);
    else
      EXPECT_GT(v, 0.0);
  }
}

TEST(Iou, RealValuedBoxesAgreeWithFineGrid) {
  Rng rng(5);
  for (int i = 0; i < 40; ++i) {
    const auto a = random_box(rng, 10.0), b = random_box(rng, 10.0);
    const double g = oracle::grid_iou({a.x_min(), a.y_min(), a.x_max(), a.y_max()},
                                      {b.x_min(), b.y_min(), b.x_max(), b.y_max()}, 0.002);
    EXPECT_NEAR(iou(a, b), g, 5e-3);
  }
}

TEST(FaceCenter, Midpoint) {
  EXPECT_EQ(face_center(BoundingBox(0, 0, 2, 2)), (Point2D{1, 1}));
  EXPECT_EQ(face_center(BoundingBox(10, 20, 30, 60)), (Point2D{20, 40}));
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto b = random_box(rng);
    EXPECT_TRUE(b.contains(face_center(b)));
  }
}

TEST(InverseDistance, Examples) {
  const BoundingBox b(0, 0, 3, 4);
  EXPECT_EQ(inverse_distance(face_center(b), b), 1.0);
  EXPECT_NEAR(inverse_distance({1.5 + 5.0, 2.0}, b), 0.5, 1e-15);  // one diagonal away
  EXPECT_NEAR(inverse_distance({11.5, 2.0}, b), 1.0 / 3.0, 1e-15);
}

TEST(InverseDistance, StrictlyDecreasingInDistance) {
  const BoundingBox b(100, 100, 200, 180);
  double prev = 2.0;
  for (int step = 0; step < 50; ++step) {
    const double d = inverse_distance({150.0 + 7.0 * step, 140.0}, b);
    EXPECT_LT(d, prev);
    EXPECT_GT(d, 0.0);
    prev = d;
  }
}

TEST(GazeRegion, CentredClippedAndDegenerate) {
  AttentionConfig cfg;
  EXPECT_EQ(gaze_region({640, 360}, cfg), BoundingBox(568, 288, 712, 432));
  EXPECT_EQ(gaze_region({0, 0}, cfg), BoundingBox(0, 0, 72, 72));
  EXPECT_THROW(gaze_region({-200, -200}, cfg), Error);
  EXPECT_THROW(gaze_region({-72, 100}, cfg), Error);  // zero-width after clipping
  EXPECT_THROW(gaze_region({2000, 100}, cfg), Error);
}

TEST(MatchScore, ConvexCombination) {
  AttentionConfig cfg;
  // Gaze region equal to the face box: both terms are 1.
  const BoundingBox face(568, 288, 712, 432);
  EXPECT_NEAR(match_score({640, 360}, face, cfg), 1.0, 1e-15);

  // gamma 0.75 with D = 0.5 and IoU = 0.2.
  EXPECT_NEAR(0.75 * 0.5 + 0.25 * 0.2, 0.425, 1e-15);

  const BoundingBox b(500, 300, 700, 420);
  const Point2D g{560, 330};
  const double d = inverse_distance(g, b);
  const double o = iou(gaze_region(g, cfg), b);
  cfg.gamma = 1.0;
  EXPECT_EQ(match_score(g, b, cfg), d);
  cfg.gamma = 0.0;
  EXPECT_EQ(match_score(g, b, cfg), o);
  cfg.gamma = 0.75;
  EXPECT_NEAR(match_score(g, b, cfg), 0.75 * d + 0.25 * o, 1e-15);
}

TEST(MatchScore, MonotoneInDistanceWithOverlapFixed) {
  // Gaze outside the box but with the region far from it: IoU stays 0.
  AttentionConfig cfg;
  const BoundingBox b(100, 300, 200, 400);
  double prev = 2.0;
  for (int step = 0; step < 20; ++step) {
    const double s = match_score({400.0 + 20.0 * step, 350.0}, b, cfg);
    EXPECT_LT(s, prev);
    prev = s;
  }
}

TEST(SelectTarget, ExamplesAndTieBreak) {
  AttentionConfig cfg;
  const std::vector<BoundingBox> faces{BoundingBox(230, 270, 410, 450),
                                       BoundingBox(870, 270, 1050, 450)};
  EXPECT_EQ(select_target({320, 360}, faces, cfg), 0u);
  EXPECT_EQ(select_target({960, 360}, faces, cfg), 1u);

  const std::vector<BoundingBox> twins{BoundingBox(230, 270, 410, 450),
                                       BoundingBox(230, 270, 410, 450)};
  EXPECT_EQ(select_target({320, 360}, twins, cfg), 0u);
  EXPECT_EQ(select_target({320, 360}, std::vector<BoundingBox>{}, cfg), std::nullopt);
}

TEST(SelectTarget, FarGazeFallsBelowThreshold) {
  // Small faces, gaze >= 20 diagonals away and no region overlap: D < 0.05.
  AttentionConfig cfg;
  const std::vector<BoundingBox> faces{BoundingBox(10, 10, 20, 20), BoundingBox(30, 10, 40, 20)};
  const Point2D g{1200, 650};
  for (const auto& f : faces) {
    EXPECT_LT(inverse_distance(g, f), 0.05);
    EXPECT_LT(match_score(g, f, cfg), 0.15);
  }
  EXPECT_EQ(select_target(g, faces, cfg), std::nullopt);
  EXPECT_EQ(select_target({-500, -500}, faces, cfg), std::nullopt);
}

TEST(SelectTarget, ScaleInvariance) {
  // Quarter-step scales keep the integer frame dimensions exact.
  Rng rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    AttentionConfig cfg;
    std::vector<BoundingBox> boxes;
    for (int i = 0; i < 3; ++i) boxes.push_back(random_box(rng, 700.0));
    const Point2D g{rng.uniform(0, 1280), rng.uniform(0, 720)};
    const double k = 0.25 * (1 + trial % 12);

    AttentionConfig scaled = cfg;
    scaled.frame_width = static_cast<int>(1280 * k);
    scaled.frame_height = static_cast<int>(720 * k);
    std::vector<BoundingBox> sboxes;
    for (const auto& b : boxes)
      sboxes.emplace_back(b.x_min() * k, b.y_min() * k, b.x_max() * k, b.y_max() * k);
    EXPECT_EQ(select_target({g.x * k, g.y * k}, sboxes, scaled), select_target(g, boxes, cfg))
        << "scale " << k;
  }
}

TEST(SelectTarget, AgreesWithBruteForce) {
  Rng rng(23);
  AttentionConfig cfg;
  const oracle::ScorerConfig oc{cfg.gamma, cfg.gaze_region_fraction, cfg.min_score_tau, 1280, 720};
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<BoundingBox> boxes;
    std::vector<oracle::Box> raw;
    const int n = static_cast<int>(rng.uniform(0.0, 5.0));
    for (int i = 0; i < n; ++i) {
      const auto b = random_box(rng, 900.0);
      boxes.push_back(b);
      raw.push_back({b.x_min(), b.y_min(), b.x_max(), b.y_max()});
    }
    const double gx = rng.uniform(-100, 1380), gy = rng.uniform(-100, 820);
    EXPECT_EQ(select_target({gx, gy}, boxes, cfg), oracle::brute_select(gx, gy, raw, oc));
  }
}

TEST(AttentionConfig, Validation) {
  AttentionConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.gamma = 1.5;
  EXPECT_THROW(cfg.validate(), Error);
  cfg = {};
  cfg.min_score_tau = 1.0;
  EXPECT_THROW(cfg.validate(), Error);
  cfg = {};
  cfg.frame_height = 0;
  EXPECT_THROW(cfg.validate(), Error);
}

}  // namespace
}  // namespace gazetse
