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

#include <cmath>
#include <limits>
#include <vector>

#include "gazetse/error.hpp"
#include "gazetse/metrics.hpp"

namespace gazetse {

namespace {

std::vector<double> centred(const std::vector<double>& v) {
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] - mean;
  return out;
}

}  // namespace

double si_sdr(const Waveform& reference, const Waveform& estimate) {
  if (reference.size() != estimate.size())
    throw Error("si_sdr: reference has " + std::to_string(reference.size()) +
                " samples, estimate has " + std::to_string(estimate.size()));
  if (reference.rate != estimate.rate) throw Error("si_sdr: sample rates differ");
  if (reference.empty()) throw Error("si_sdr: empty signals");

  const auto s = centred(reference.samples);
  const auto e = centred(estimate.samples);
  double ss = 0.0, es = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    ss += s[i] * s[i];
    es += e[i] * s[i];
  }
  if (ss <= 0.0) throw Error("si_sdr: reference is zero after mean removal");

  const double alpha = es / ss;
  double target = 0.0, residual = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double t = alpha * s[i];
    const double r = t - e[i];
    target += t * t;
    residual += r * r;
  }
  if (residual == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(target / residual);
}

}  // namespace gazetse
