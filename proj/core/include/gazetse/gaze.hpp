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

#include <vector>

#include "gazetse/alignment.hpp"
#include "gazetse/geometry.hpp"

namespace gazetse {

struct GazeSample {
  double t = 0.0;  // seconds
  Point2D point;
  bool valid = true;
};

struct GazeTrace {
  std::vector<GazeSample> samples;
  double nominal_rate = kGazeRate;

  // Throws gazetse::Error unless timestamps are finite, non-negative and
  // strictly increasing and the rate is positive.
  void validate() const;
};

}  // namespace gazetse
