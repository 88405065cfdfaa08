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

#include "gazetse/resample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <numbers>

#include "gazetse/error.hpp"

namespace gazetse {

namespace {

constexpr double kKaiserBeta = 9.6;
// Passband edge as a fraction of the lower Nyquist frequency.
constexpr double kCutoffFraction = 0.93;

double sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

}  // namespace

PolyphaseResampler::PolyphaseResampler(int in_rate, int out_rate, std::size_t taps_per_phase) {
  if (in_rate <= 0 || out_rate <= 0) throw Error("resampler rates must be positive");
  if (taps_per_phase < 8) throw Error("resampler needs at least 8 taps per phase");
  const int g = std::gcd(in_rate, out_rate);
  up_ = out_rate / g;
  down_ = in_rate / g;

  const double fs_up = static_cast<double>(in_rate) * up_;
  cutoff_hz_ = kCutoffFraction * 0.5 * std::min(in_rate, out_rate);
  std::size_t length = taps_per_phase * static_cast<std::size_t>(up_);
  if (length % 2 == 0) ++length;  // odd length: integer group delay
  const double centre = 0.5 * static_cast<double>(length - 1);
  const double fc = cutoff_hz_ / fs_up;  // cycles per upsampled sample
  const double norm = std::cyl_bessel_i(0.0, kKaiserBeta);

  filter_.resize(length);
  for (std::size_t n = 0; n < length; ++n) {
    const double r = (static_cast<double>(n) - centre) / centre;
    const double kaiser = std::cyl_bessel_i(0.0, kKaiserBeta * std::sqrt(std::max(0.0, 1.0 - r * r))) / norm;
    filter_[n] = up_ * 2.0 * fc * sinc(2.0 * fc * (static_cast<double>(n) - centre)) * kaiser;
  }
}

std::vector<double> PolyphaseResampler::process(std::span<const double> input) const {
  const auto n_in = static_cast<long long>(input.size());
  const long long up = up_, down = down_;
  const auto n_out = static_cast<std::size_t>((n_in * up + down - 1) / down);
  const auto taps = static_cast<long long>(filter_.size());
  const long long delay = (taps - 1) / 2;

  std::vector<double> out(n_out, 0.0);
  for (std::size_t m = 0; m < n_out; ++m) {
    // y[m] = sum_n x[n] h[m*down + delay - n*up], 0 <= index < taps.
    const long long base = static_cast<long long>(m) * down + delay;
    long long n_lo = base - (taps - 1);
    n_lo = n_lo <= 0 ? 0 : (n_lo + up - 1) / up;
    const long long n_hi = std::min(n_in - 1, base / up);
    double acc = 0.0;
    for (long long n = n_lo; n <= n_hi; ++n)
      acc += input[static_cast<std::size_t>(n)] * filter_[static_cast<std::size_t>(base - n * up)];
    out[m] = acc;
  }
  return out;
}

}  // namespace gazetse
