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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gazetse/error.hpp"

namespace gazetse {

BoundingBox::BoundingBox(double x_min, double y_min, double x_max, double y_max)
    : x_min_(x_min), y_min_(y_min), x_max_(x_max), y_max_(y_max) {
  const bool finite = std::isfinite(x_min) && std::isfinite(y_min) &&
                      std::isfinite(x_max) && std::isfinite(y_max);
  if (!finite || !(x_min < x_max) || !(y_min < y_max)) {
    std::ostringstream os;
    os << "invalid bounding box [" << x_min << ", " << y_min << ", " << x_max
       << ", " << y_max << "]";
    throw Error(os.str());
  }
}

double BoundingBox::diagonal() const { return std::hypot(width(), height()); }

void AttentionConfig::validate() const {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw Error("gamma must lie in [0, 1]");
  if (!(gaze_region_fraction > 0.0 && gaze_region_fraction <= 1.0))
    throw Error("gaze_region_fraction must lie in (0, 1]");
  if (!(min_score_tau >= 0.0 && min_score_tau < 1.0))
    throw Error("min_score_tau must lie in [0, 1)");
  if (frame_width <= 0 || frame_height <= 0)
    throw Error("frame dimensions must be positive");
}

double iou(const BoundingBox& a, const BoundingBox& b) {
  const double iw = std::min(a.x_max(), b.x_max()) - std::max(a.x_min(), b.x_min());
  const double ih = std::min(a.y_max(), b.y_max()) - std::max(a.y_min(), b.y_min());
  if (iw <= 0.0 || ih <= 0.0) return 0.0;
  const double inter = iw * ih;
  const double uni = a.area() + b.area() - inter;
  return std::clamp(inter / uni, 0.0, 1.0);
}

Point2D face_center(const BoundingBox& b) {
  return {0.5 * (b.x_min() + b.x_max()), 0.5 * (b.y_min() + b.y_max())};
}

double inverse_distance(Point2D gaze, const BoundingBox& b) {
  const Point2D c = face_center(b);
  const double d = std::hypot(gaze.x - c.x, gaze.y - c.y);
  return 1.0 / (1.0 + d / b.diagonal());
}

BoundingBox gaze_region(Point2D gaze, const AttentionConfig& cfg) {
  const double half = 0.5 * cfg.gaze_region_fraction * cfg.frame_height;
  const double x0 = std::max(gaze.x - half, 0.0);
  const double y0 = std::max(gaze.y - half, 0.0);
  const double x1 = std::min(gaze.x + half, static_cast<double>(cfg.frame_width));
  const double y1 = std::min(gaze.y + half, static_cast<double>(cfg.frame_height));
  if (!(x0 < x1) || !(y0 < y1)) {
    std::ostringstream os;
    os << "gaze region around (" << gaze.x << ", " << gaze.y
       << ") lies outside the frame";
    throw Error(os.str());
  }
  return BoundingBox(x0, y0, x1, y1);
}

double match_score(Point2D gaze, const BoundingBox& b, const AttentionConfig& cfg) {
  const double d = inverse_distance(gaze, b);
  const double overlap = iou(gaze_region(gaze, cfg), b);
  return cfg.gamma * d + (1.0 - cfg.gamma) * overlap;
}

std::optional<std::size_t> select_target(Point2D gaze,
                                         std::span<const BoundingBox> boxes,
                                         const AttentionConfig& cfg) {
  if (boxes.empty()) return std::nullopt;
  if (!std::isfinite(gaze.x) || !std::isfinite(gaze.y)) return std::nullopt;
  std::optional<BoundingBox> region;
  try {
    region = gaze_region(gaze, cfg);
  } catch (const Error&) {
    return std::nullopt;
  }

  std::size_t best = 0;
  double best_score = -1.0;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const double score = cfg.gamma * inverse_distance(gaze, boxes[i]) +
                         (1.0 - cfg.gamma) * iou(*region, boxes[i]);
    if (score > best_score) {
      best_score = score;
      best = i;
    }
  }
  if (best_score < cfg.min_score_tau) return std::nullopt;
  return best;
}

}  // namespace gazetse
