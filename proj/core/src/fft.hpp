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

namespace gazetse::detail {

// Real-input DFT of a fixed size backed by FFTW. Plans are created once per
// size under a lock and shared; execution is thread-safe.
class RealFft {
 public:
  explicit RealFft(std::size_t n);

  std::size_t size() const { return n_; }
  std::size_t bins() const { return n_ / 2 + 1; }

  // out[k] = sum_n in[n] exp(-2 pi i k n / N), k = 0..N/2. `in` may be shorter
  // than N; it is zero-padded.
  void forward(std::span<const double> in, std::span<std::complex<double>> out) const;
  // Unnormalized inverse: out = N * idft(in).
  void inverse(std::span<const std::complex<double>> in, std::span<double> out) const;

 private:
  std::size_t n_;
  void* forward_plan_;
  void* inverse_plan_;
};

}  // namespace gazetse::detail
