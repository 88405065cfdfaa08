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

#include "gazetse/audio.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gazetse/error.hpp"

namespace gazetse {

double mean_square(const Waveform& x) {
  if (x.empty()) return 0.0;
  double acc = 0.0;
  for (double v : x.samples) acc += v * v;
  return acc / static_cast<double>(x.size());
}

double peak_abs(const Waveform& x) {
  double p = 0.0;
  for (double v : x.samples) p = std::max(p, std::abs(v));
  return p;
}

Waveform trim_or_pad(const Waveform& x, std::size_t length) {
  Waveform out;
  out.rate = x.rate;
  out.samples.assign(length, 0.0);
  std::copy_n(x.samples.begin(), std::min(length, x.size()), out.samples.begin());
  return out;
}

Waveform mix_equal_gain(const Waveform& target, const Waveform& interferer) {
  if (target.rate != interferer.rate) throw Error("mix_equal_gain: sample rates differ");
  Waveform fitted = trim_or_pad(interferer, target.size());
  for (double& v : fitted.samples) v = clip_unit(v);

  Waveform out;
  out.rate = target.rate;
  out.samples.resize(target.size());
  for (std::size_t n = 0; n < target.size(); ++n)
    out.samples[n] = clip_unit(target.samples[n] + fitted.samples[n]);
  return out;
}

Waveform add_noise_snr(const Waveform& x, const Waveform& noise, double snr_db) {
  if (x.rate != noise.rate) throw Error("add_noise_snr: sample rates differ");
  if (noise.size() < x.size()) throw Error("add_noise_snr: noise is shorter than the signal");
  if (!std::isfinite(snr_db)) throw Error("add_noise_snr: snr must be finite");
  const Waveform fitted = trim_or_pad(noise, x.size());
  const double px = mean_square(x);
  const double pn = mean_square(fitted);
  if (px <= 0.0) throw Error("add_noise_snr: signal has zero power");
  if (pn <= 0.0) throw Error("add_noise_snr: noise has zero power");

  const double gain = std::sqrt(px / (pn * std::pow(10.0, snr_db / 10.0)));
  Waveform out;
  out.rate = x.rate;
  out.samples.resize(x.size());
  for (std::size_t n = 0; n < x.size(); ++n)
    out.samples[n] = clip_unit(x.samples[n] + gain * fitted.samples[n]);
  return out;
}

std::size_t switch_gap_samples(double gap_seconds, int rate) {
  if (!(gap_seconds >= 0.0) || !std::isfinite(gap_seconds))
    throw Error("switch gap must be a non-negative duration");
  if (rate <= 0 || rate % kVideoFps != 0) throw Error("sample rate is not video-frame aligned");
  const double exact = gap_seconds * rate;
  const double rounded = std::round(exact);
  const auto frame = static_cast<long long>(rate / kVideoFps);
  const auto n = static_cast<long long>(rounded);
  if (std::abs(exact - rounded) > 1e-6 || n % frame != 0) {
    std::ostringstream os;
    os << "switch gap of " << gap_seconds << " s (" << exact
       << " samples) is not a multiple of one video frame (" << frame << " samples)";
    throw Error(os.str());
  }
  return static_cast<std::size_t>(n);
}

Waveform build_switch_mixture(const Waveform& mix, double gap_seconds) {
  const std::size_t gap = switch_gap_samples(gap_seconds, mix.rate);
  Waveform out;
  out.rate = mix.rate;
  out.samples.reserve(2 * mix.size() + gap);
  out.samples.insert(out.samples.end(), mix.samples.begin(), mix.samples.end());
  out.samples.insert(out.samples.end(), gap, 0.0);
  out.samples.insert(out.samples.end(), mix.samples.begin(), mix.samples.end());
  for (double& v : out.samples) v = clip_unit(v);
  return out;
}

Waveform build_switch_reference(const Waveform& clean_a, const Waveform& clean_b,
                                double gap_seconds) {
  if (clean_a.rate != clean_b.rate) throw Error("build_switch_reference: sample rates differ");
  if (clean_a.size() != clean_b.size())
    throw Error("build_switch_reference: clean signals differ in length");
  const std::size_t gap = switch_gap_samples(gap_seconds, clean_a.rate);
  Waveform out;
  out.rate = clean_a.rate;
  out.samples.reserve(2 * clean_a.size() + gap);
  out.samples.insert(out.samples.end(), clean_a.samples.begin(), clean_a.samples.end());
  out.samples.insert(out.samples.end(), gap, 0.0);
  out.samples.insert(out.samples.end(), clean_b.samples.begin(), clean_b.samples.end());
  return out;
}

}  // namespace gazetse
