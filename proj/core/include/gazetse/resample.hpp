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
#include <span>
#include <vector>

namespace gazetse {

/// Rational-ratio polyphase resampler with a Kaiser-windowed sinc prototype
/// (beta 9.6, about 95 dB stopband). The prototype is linear phase and its
/// group delay is compensated, so output sample m is aligned with input time
/// m / out_rate. Output length is ceil(N * out_rate / in_rate).
class PolyphaseResampler {
 public:
  PolyphaseResampler(int in_rate, int out_rate, std::size_t taps_per_phase = 160);

  int up() const { return up_; }
  int down() const { return down_; }
  std::size_t taps() const { return filter_.size(); }
  /// Passband edge of the anti-aliasing filter, Hz at the output rate scale.
  double cutoff_hz() const { return cutoff_hz_; }

  std::vector<double> process(std::span<const double> input) const;

 private:
  int up_ = 1;
  int down_ = 1;
  double cutoff_hz_ = 0.0;
  std::vector<double> filter_;
};

}  // namespace gazetse
