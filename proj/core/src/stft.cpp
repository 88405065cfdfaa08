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

#include "gazetse/stft.hpp"

#include <cmath>
#include <numbers>

#include "fft.hpp"
#include "gazetse/error.hpp"

namespace gazetse {

void StftConfig::validate() const {
  if (window_length == 0 || hop == 0) throw Error("STFT window and hop must be positive");
  if (hop * 4 != window_length) throw Error("STFT hop must be a quarter of the window (Hann COLA)");
  if (fft_size < window_length) throw Error("STFT fft_size must be at least the window length");
  if (hop * kHopsPerVideoFrame != kSamplesPerVideoFrame)
    throw Error("STFT hop must split one 640-sample video frame into exactly 5 hops");
}

std::vector<double> periodic_hann(std::size_t length) {
  std::vector<double> w(length);
  for (std::size_t n = 0; n < length; ++n)
    w[n] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(n) /
                                static_cast<double>(length));
  return w;
}

ComplexSpectrogram::ComplexSpectrogram(StftConfig cfg, std::size_t n_frames,
                                       std::size_t signal_length, int rate)
    : cfg_(cfg),
      n_frames_(n_frames),
      signal_length_(signal_length),
      rate_(rate),
      data_(n_frames * cfg.bins()) {}

ComplexSpectrogram stft(const Waveform& x, const StftConfig& cfg) {
  cfg.validate();
  const std::size_t n = x.size();
  const std::size_t frames = cfg.frame_count(n);
  ComplexSpectrogram spec(cfg, frames, n, x.rate);
  if (frames == 0) return spec;

  const detail::RealFft fft(cfg.fft_size);
  const auto window = periodic_hann(cfg.window_length);
  const auto half = static_cast<std::ptrdiff_t>(cfg.window_length / 2);
  std::vector<double> buf(cfg.window_length);
  for (std::size_t t = 0; t < frames; ++t) {
    const std::ptrdiff_t start = static_cast<std::ptrdiff_t>(t * cfg.hop) - half;
    for (std::size_t i = 0; i < cfg.window_length; ++i) {
      const std::ptrdiff_t s = start + static_cast<std::ptrdiff_t>(i);
      const double v = (s >= 0 && s < static_cast<std::ptrdiff_t>(n))
                           ? x.samples[static_cast<std::size_t>(s)]
                           : 0.0;
      buf[i] = v * window[i];
    }
    fft.forward(buf, spec.frame(t));
  }
  return spec;
}

Waveform istft(const ComplexSpectrogram& spec) {
  const StftConfig& cfg = spec.config();
  cfg.validate();
  const std::size_t n = spec.signal_length();
  Waveform out;
  out.rate = spec.rate();
  out.samples.assign(n, 0.0);
  if (spec.frames() == 0) return out;

  const detail::RealFft fft(cfg.fft_size);
  const auto window = periodic_hann(cfg.window_length);
  const auto half = static_cast<std::ptrdiff_t>(cfg.window_length / 2);
  const double scale = 1.0 / static_cast<double>(cfg.fft_size);
  std::vector<double> envelope(n, 0.0);
  std::vector<double> frame(cfg.fft_size);
  for (std::size_t t = 0; t < spec.frames(); ++t) {
    fft.inverse(spec.frame(t), frame);
    const std::ptrdiff_t start = static_cast<std::ptrdiff_t>(t * cfg.hop) - half;
    for (std::size_t i = 0; i < cfg.window_length; ++i) {
      const std::ptrdiff_t s = start + static_cast<std::ptrdiff_t>(i);
      if (s < 0 || s >= static_cast<std::ptrdiff_t>(n)) continue;
      const auto u = static_cast<std::size_t>(s);
      out.samples[u] += frame[i] * scale * window[i];
      envelope[u] += window[i] * window[i];
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    out.samples[i] = envelope[i] > 1e-12 ? out.samples[i] / envelope[i] : 0.0;
  return out;
}

Waveform istft(const ComplexSpectrogram& spec, const StftConfig& expected) {
  if (!(spec.config() == expected)) throw Error("istft: spectrogram was built with another config");
  return istft(spec);
}

MaskSequence irm(std::span<const ComplexSpectrogram> sources, std::size_t target_index) {
  if (sources.empty()) throw Error("irm: no sources");
  if (target_index >= sources.size()) throw Error("irm: target index out of range");
  for (const auto& s : sources)
    if (!s.same_shape(sources.front())) throw Error("irm: source spectrograms differ in shape");

  constexpr double kEps = 1e-12;
  const auto& target = sources[target_index];
  MaskSequence mask;
  mask.frames = target.frames();
  mask.bins = target.bins();
  mask.gains.resize(mask.frames * mask.bins);
  for (std::size_t t = 0; t < mask.frames; ++t) {
    for (std::size_t k = 0; k < mask.bins; ++k) {
      double den = 0.0;
      for (const auto& s : sources) den += std::abs(s.at(t, k));
      mask.gains[t * mask.bins + k] = std::abs(target.at(t, k)) / (den + kEps);
    }
  }
  return mask;
}

}  // namespace gazetse
