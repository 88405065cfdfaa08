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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "gazetse/audio.hpp"

namespace gazetse {

/// Periodic-Hann STFT front end. The defaults make one 40 ms video frame
/// exactly five hops at 16 kHz.
struct StftConfig {
  std::size_t window_length = 512;
  std::size_t hop = kDefaultHop;
  std::size_t fft_size = 512;

  // Requires hop == window_length / 4 (Hann COLA) and fft_size >= window_length.
  void validate() const;
  std::size_t bins() const { return fft_size / 2 + 1; }
  /// Centered framing: frame f is centered on sample f * hop, so a signal of
  /// N > 0 samples has 1 + N / hop frames (integer division). Empty input has
  /// no frames.
  std::size_t frame_count(std::size_t n_samples) const {
    return n_samples == 0 ? 0 : 1 + n_samples / hop;
  }

  friend bool operator==(const StftConfig&, const StftConfig&) = default;
};

std::vector<double> periodic_hann(std::size_t length);

/// Time-major grid of complex bins.
class ComplexSpectrogram {
 public:
  ComplexSpectrogram() = default;
  ComplexSpectrogram(StftConfig cfg, std::size_t n_frames, std::size_t signal_length, int rate);

  const StftConfig& config() const { return cfg_; }
  std::size_t frames() const { return n_frames_; }
  std::size_t bins() const { return cfg_.bins(); }
  std::size_t signal_length() const { return signal_length_; }
  int rate() const { return rate_; }

  std::span<std::complex<double>> frame(std::size_t t) {
    return {data_.data() + t * bins(), bins()};
  }
  std::span<const std::complex<double>> frame(std::size_t t) const {
    return {data_.data() + t * bins(), bins()};
  }
  std::complex<double>& at(std::size_t t, std::size_t k) { return data_[t * bins() + k]; }
  const std::complex<double>& at(std::size_t t, std::size_t k) const {
    return data_[t * bins() + k];
  }
  bool same_shape(const ComplexSpectrogram& o) const {
    return cfg_ == o.cfg_ && n_frames_ == o.n_frames_;
  }

 private:
  StftConfig cfg_;
  std::size_t n_frames_ = 0;
  std::size_t signal_length_ = 0;
  int rate_ = kSampleRate;
  std::vector<std::complex<double>> data_;
};

/// Real gains in [0, 1], aligned with a spectrogram.
struct MaskSequence {
  std::size_t frames = 0;
  std::size_t bins = 0;
  std::vector<double> gains;  // time-major

  double at(std::size_t t, std::size_t k) const { return gains[t * bins + k]; }
};

ComplexSpectrogram stft(const Waveform& x, const StftConfig& cfg = {});

/// Weighted overlap-add inverse normalized by the accumulated squared window,
/// trimmed back to the analysed signal length.
Waveform istft(const ComplexSpectrogram& spec);
/// As above, additionally checking that `spec` was produced with `expected`.
Waveform istft(const ComplexSpectrogram& spec, const StftConfig& expected);

/// Magnitude-ratio ideal ratio mask |S_target| / (sum_j |S_j| + 1e-12).
MaskSequence irm(std::span<const ComplexSpectrogram> sources, std::size_t target_index);

}  // namespace gazetse
