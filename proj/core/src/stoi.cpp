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

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "fft.hpp"
#include "gazetse/error.hpp"
#include "gazetse/metrics.hpp"
#include "gazetse/resample.hpp"

namespace gazetse {

namespace {

constexpr int kStoiRate = 10000;
constexpr std::size_t kFrameLength = 256;
constexpr std::size_t kFrameHop = kFrameLength / 2;
constexpr std::size_t kFftSize = 512;
constexpr std::size_t kBands = 15;
constexpr double kLowestCentre = 150.0;
constexpr std::size_t kSegmentFrames = 30;
constexpr double kBetaDb = -15.0;
constexpr double kDynamicRangeDb = 40.0;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Symmetric Hann without the zero end points (MATLAB hanning(N)).
std::vector<double> analysis_window() {
  std::vector<double> w(kFrameLength);
  for (std::size_t n = 0; n < kFrameLength; ++n)
    w[n] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(n + 1) /
                                static_cast<double>(kFrameLength + 1));
  return w;
}

// Frame starts 0, hop, ... strictly below len - frame (reference convention).
std::size_t frame_starts(std::size_t len) {
  if (len <= kFrameLength) return 0;
  return (len - kFrameLength + kFrameHop - 1) / kFrameHop;
}

// [lo, hi) bin ranges of the third-octave bands.
std::array<std::pair<std::size_t, std::size_t>, kBands> band_edges() {
  const std::size_t n_bins = kFftSize / 2 + 1;
  const auto nearest_bin = [&](double f) {
    std::size_t best = 0;
    double best_d = INFINITY;
    for (std::size_t k = 0; k < n_bins; ++k) {
      const double fk = static_cast<double>(k) * kStoiRate / kFftSize;
      const double d = (fk - f) * (fk - f);
      if (d < best_d) {
        best_d = d;
        best = k;
      }
    }
    return best;
  };
  std::array<std::pair<std::size_t, std::size_t>, kBands> edges{};
  for (std::size_t b = 0; b < kBands; ++b) {
    const double k = static_cast<double>(b);
    edges[b] = {nearest_bin(kLowestCentre * std::pow(2.0, (2.0 * k - 1.0) / 6.0)),
                nearest_bin(kLowestCentre * std::pow(2.0, (2.0 * k + 1.0) / 6.0))};
  }
  return edges;
}

// Drops frames of both signals where the reference is more than 40 dB below
// its loudest frame, and overlap-adds the survivors back into signals.
void remove_silent_frames(std::vector<double>& x, std::vector<double>& y,
                          const std::vector<double>& w) {
  const std::size_t frames = frame_starts(x.size());
  std::vector<double> energy(frames);
  for (std::size_t f = 0; f < frames; ++f) {
    double acc = 0.0;
    for (std::size_t n = 0; n < kFrameLength; ++n) {
      const double v = w[n] * x[f * kFrameHop + n];
      acc += v * v;
    }
    energy[f] = 20.0 * std::log10(std::sqrt(acc) + kEps);
  }
  const double peak = frames ? *std::max_element(energy.begin(), energy.end()) : 0.0;

  std::vector<std::size_t> keep;
  for (std::size_t f = 0; f < frames; ++f)
    if (peak - kDynamicRangeDb - energy[f] < 0.0) keep.push_back(f);

  const std::size_t out_len = keep.empty() ? 0 : (keep.size() - 1) * kFrameHop + kFrameLength;
  std::vector<double> xs(out_len, 0.0), ys(out_len, 0.0);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const std::size_t src = keep[i] * kFrameHop;
    const std::size_t dst = i * kFrameHop;
    for (std::size_t n = 0; n < kFrameLength; ++n) {
      xs[dst + n] += w[n] * x[src + n];
      ys[dst + n] += w[n] * y[src + n];
    }
  }
  x = std::move(xs);
  y = std::move(ys);
}

// Third-octave band envelopes, [band][frame].
std::vector<std::vector<double>> band_envelopes(const std::vector<double>& x,
                                                const std::vector<double>& w,
                                                const detail::RealFft& fft) {
  static const auto edges = band_edges();
  const std::size_t frames = frame_starts(x.size());
  std::vector<std::vector<double>> env(kBands, std::vector<double>(frames));
  std::vector<double> buf(kFrameLength);
  std::vector<std::complex<double>> spec(fft.bins());
  for (std::size_t f = 0; f < frames; ++f) {
    for (std::size_t n = 0; n < kFrameLength; ++n) buf[n] = w[n] * x[f * kFrameHop + n];
    fft.forward(buf, spec);
    for (std::size_t b = 0; b < kBands; ++b) {
      double acc = 0.0;
      for (std::size_t k = edges[b].first; k < edges[b].second; ++k) acc += std::norm(spec[k]);
      env[b][f] = std::sqrt(acc);
    }
  }
  return env;
}

}  // namespace

double stoi(const Waveform& reference, const Waveform& estimate, int rate) {
  if (reference.size() != estimate.size())
    throw Error("stoi: reference has " + std::to_string(reference.size()) +
                " samples, estimate has " + std::to_string(estimate.size()));
  if (rate <= 0) throw Error("stoi: invalid sample rate");

  std::vector<double> x = reference.samples;
  std::vector<double> y = estimate.samples;
  if (rate != kStoiRate) {
    const PolyphaseResampler resampler(rate, kStoiRate);
    x = resampler.process(x);
    y = resampler.process(y);
  }

  const auto w = analysis_window();
  remove_silent_frames(x, y, w);

  const detail::RealFft fft(kFftSize);
  const auto xe = band_envelopes(x, w, fft);
  const auto ye = band_envelopes(y, w, fft);
  const std::size_t frames = xe.front().size();
  if (frames < kSegmentFrames)
    throw Error("stoi: signal too short; need at least 30 non-silent frames, found " +
                std::to_string(frames));

  const double clip = 1.0 + std::pow(10.0, -kBetaDb / 20.0);
  double total = 0.0;
  std::array<double, kSegmentFrames> xs{}, ys{};
  const std::size_t segments = frames - kSegmentFrames + 1;
  for (std::size_t m = 0; m < segments; ++m) {
    for (std::size_t b = 0; b < kBands; ++b) {
      double nx = 0.0, ny = 0.0;
      for (std::size_t j = 0; j < kSegmentFrames; ++j) {
        xs[j] = xe[b][m + j];
        ys[j] = ye[b][m + j];
        nx += xs[j] * xs[j];
        ny += ys[j] * ys[j];
      }
      const double alpha = std::sqrt(nx) / (std::sqrt(ny) + kEps);
      double mx = 0.0, my = 0.0;
      for (std::size_t j = 0; j < kSegmentFrames; ++j) {
        ys[j] = std::min(alpha * ys[j], xs[j] * clip);
        mx += xs[j];
        my += ys[j];
      }
      mx /= kSegmentFrames;
      my /= kSegmentFrames;
      double sxx = 0.0, syy = 0.0, sxy = 0.0;
      for (std::size_t j = 0; j < kSegmentFrames; ++j) {
        const double a = xs[j] - mx;
        const double c = ys[j] - my;
        sxx += a * a;
        syy += c * c;
        sxy += a * c;
      }
      total += sxy / ((std::sqrt(sxx) + kEps) * (std::sqrt(syy) + kEps));
    }
  }
  return total / static_cast<double>(segments * kBands);
}

}  // namespace gazetse
