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

#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "gazetse/error.hpp"

namespace gazetse::detail {

namespace {

struct Plans {
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;
};

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// Plans live for the process lifetime.
Plans& plans_for(std::size_t n) {
  static std::map<std::size_t, Plans> registry;
  std::lock_guard lock(planner_mutex());
  auto it = registry.find(n);
  if (it != registry.end()) return it->second;

  const int len = static_cast<int>(n);
  double* real = fftw_alloc_real(n);
  fftw_complex* spec = fftw_alloc_complex(n / 2 + 1);
  Plans p;
  p.forward = fftw_plan_dft_r2c_1d(len, real, spec, FFTW_ESTIMATE);
  p.inverse = fftw_plan_dft_c2r_1d(len, spec, real, FFTW_ESTIMATE);
  fftw_free(real);
  fftw_free(spec);
  if (!p.forward || !p.inverse) throw Error("FFTW could not plan a transform");
  return registry.emplace(n, p).first->second;
}

struct FftwDeleter {
  void operator()(void* p) const { fftw_free(p); }
};

struct Scratch {
  std::unique_ptr<double, FftwDeleter> real;
  std::unique_ptr<fftw_complex, FftwDeleter> spec;
};

Scratch& scratch_for(std::size_t n) {
  thread_local std::map<std::size_t, Scratch> buffers;
  auto it = buffers.find(n);
  if (it == buffers.end()) {
    Scratch s;
    s.real.reset(fftw_alloc_real(n));
    s.spec.reset(fftw_alloc_complex(n / 2 + 1));
    it = buffers.emplace(n, std::move(s)).first;
  }
  return it->second;
}

}  // namespace

RealFft::RealFft(std::size_t n) : n_(n) {
  if (n < 2) throw Error("FFT size must be at least 2");
  Plans& p = plans_for(n);
  forward_plan_ = p.forward;
  inverse_plan_ = p.inverse;
}

void RealFft::forward(std::span<const double> in, std::span<std::complex<double>> out) const {
  if (in.size() > n_ || out.size() != bins()) throw Error("RealFft::forward: size mismatch");
  Scratch& s = scratch_for(n_);
  double* real = s.real.get();
  std::copy(in.begin(), in.end(), real);
  std::fill(real + in.size(), real + n_, 0.0);
  fftw_execute_dft_r2c(static_cast<fftw_plan>(forward_plan_), real, s.spec.get());
  for (std::size_t k = 0; k < bins(); ++k) out[k] = {s.spec.get()[k][0], s.spec.get()[k][1]};
}

void RealFft::inverse(std::span<const std::complex<double>> in, std::span<double> out) const {
  if (in.size() != bins() || out.size() != n_) throw Error("RealFft::inverse: size mismatch");
  Scratch& s = scratch_for(n_);
  fftw_complex* spec = s.spec.get();
  for (std::size_t k = 0; k < bins(); ++k) {
    spec[k][0] = in[k].real();
    spec[k][1] = in[k].imag();
  }
  fftw_execute_dft_c2r(static_cast<fftw_plan>(inverse_plan_), spec, s.real.get());
  std::copy(s.real.get(), s.real.get() + n_, out.begin());
}

}  // namespace gazetse::detail
