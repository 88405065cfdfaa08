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

#include <cstddef>
#include <optional>
#include <span>

namespace gazetse {

struct Point2D {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2D&, const Point2D&) = default;
};

/// Axis-aligned box in pixel coordinates. Construction rejects empty,
/// inverted or non-finite boxes, so every BoundingBox value is valid.
class BoundingBox {
 public:
  BoundingBox(double x_min, double y_min, double x_max, double y_max);

  double x_min() const { return x_min_; }
  double y_min() const { return y_min_; }
  double x_max() const { return x_max_; }
  double y_max() const { return y_max_; }

  double width() const { return x_max_ - x_min_; }
  double height() const { return y_max_ - y_min_; }
  double area() const { return width() * height(); }
  double diagonal() const;

  bool contains(Point2D p) const {
    return p.x >= x_min_ && p.x <= x_max_ && p.y >= y_min_ && p.y <= y_max_;
  }

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;

 private:
  double x_min_, y_min_, x_max_, y_max_;
};

struct AttentionConfig {
  double gamma = 0.75;
  // Side of the square gaze region, as a fraction of the frame height.
  double gaze_region_fraction = 0.2;
  double min_score_tau = 0.15;
  int frame_width = 1280;
  int frame_height = 720;

  void validate() const;
};

double iou(const BoundingBox& a, const BoundingBox& b);

Point2D face_center(const BoundingBox& b);

/// 1 / (1 + |g - center(b)| / diag(b)). Equals 1 at the face center and
/// uses the box diagonal as its length unit, so it is camera-scale free.
double inverse_distance(Point2D gaze, const BoundingBox& b);

/// Square window of side gaze_region_fraction * frame_height centered on the
/// gaze point, clipped to the frame. Throws gazetse::Error when the clipped
/// window is degenerate.
BoundingBox gaze_region(Point2D gaze, const AttentionConfig& cfg);

/// gamma * D + (1 - gamma) * IoU(gaze region, b).
double match_score(Point2D gaze, const BoundingBox& b, const AttentionConfig& cfg);

/// Index of the best-scoring box, lowest index on ties. Returns nullopt when
/// there are no boxes, the best score is below min_score_tau, or the gaze
/// region falls outside the frame.
std::optional<std::size_t> select_target(Point2D gaze,
                                         std::span<const BoundingBox> boxes,
                                         const AttentionConfig& cfg);

}  // namespace gazetse
