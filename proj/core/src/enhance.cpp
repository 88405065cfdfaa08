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

#include "gazetse/enhance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

#include "gazetse/error.hpp"

namespace gazetse {

Waveform gaze_gated_enhance(const Waveform& mixture, std::span<const Waveform> clean_sources,
                            const SelectionTrace& selection, const StftConfig& cfg) {
  cfg.validate();
  if (clean_sources.empty()) throw Error("enhance: no clean sources");
  for (const auto& s : clean_sources) {
    if (s.rate != mixture.rate) throw Error("enhance: source and mixture sample rates differ");
    if (s.size() != mixture.size()) throw Error("enhance: source and mixture lengths differ");
  }
  const std::size_t needed = video_frames_covering(mixture.size());
  if (selection.size() < needed)
    throw Error("enhance: selection covers " + std::to_string(selection.size()) +
                " video frames, mixture needs " + std::to_string(needed));
  for (const auto& id : selection.per_frame)
    if (id && *id >= clean_sources.size()) throw Error("enhance: selection names a missing source");

  ComplexSpectrogram mix_spec = stft(mixture, cfg);
  if (mix_spec.frames() == 0) return istft(mix_spec);

  // Magnitudes of every source, and their per-bin sum.
  const std::size_t frames = mix_spec.frames();
  const std::size_t bins = mix_spec.bins();
  std::vector<std::vector<double>> mags;
  mags.reserve(clean_sources.size());
  std::vector<double> den(frames * bins, 0.0);
  for (const auto& src : clean_sources) {
    const ComplexSpectrogram s = stft(src, cfg);
    auto& m = mags.emplace_back(frames * bins);
    for (std::size_t t = 0; t < frames; ++t)
      for (std::size_t k = 0; k < bins; ++k) {
        m[t * bins + k] = std::abs(s.at(t, k));
        den[t * bins + k] += m[t * bins + k];
      }
  }

  constexpr double kEps = 1e-12;
  for (std::size_t t = 0; t < frames; ++t) {
    const std::size_t v = std::min(t * cfg.hop / kSamplesPerVideoFrame, selection.size() - 1);
    const auto& pick = selection.per_frame[v];
    if (!pick) continue;
    const auto& m = mags[*pick];
    for (std::size_t k = 0; k < bins; ++k)
      mix_spec.at(t, k) *= m[t * bins + k] / (den[t * bins + k] + kEps);
  }
  return istft(mix_spec);
}

Waveform fixed_target_enhance(const Waveform& mixture, std::span<const Waveform> clean_sources,
                              std::size_t fixed, const StftConfig& cfg) {
  if (fixed >= clean_sources.size()) throw Error("enhance: fixed target index out of range");
  SelectionTrace constant;
  constant.per_frame.assign(video_frames_covering(mixture.size()), fixed);
  return gaze_gated_enhance(mixture, clean_sources, constant, cfg);
}

void write_spectrogram_pgm(const std::filesystem::path& path, const ComplexSpectrogram& spec) {
  if (spec.frames() == 0) throw Error("spectrogram has no frames");
  const std::size_t w = spec.frames();
  const std::size_t h = spec.bins();
  std::vector<double> db(w * h);
  double lo = INFINITY, hi = -INFINITY;
  for (std::size_t t = 0; t < w; ++t)
    for (std::size_t k = 0; k < h; ++k) {
      const double v = 20.0 * std::log10(std::abs(spec.at(t, k)) + 1e-8);
      db[t * h + k] = v;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  const double range = hi - lo;

  std::string pixels(w * h, '\0');
  for (std::size_t row = 0; row < h; ++row) {
    const std::size_t k = h - 1 - row;
    for (std::size_t t = 0; t < w; ++t) {
      const double norm = range > 0.0 ? (db[t * h + k] - lo) / range : 0.0;
      pixels[row * w + t] = static_cast<char>(static_cast<unsigned char>(std::lround(norm * 255.0)));
    }
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << "P5\n" << w << ' ' << h << "\n255\n";
  out.write(pixels.data(), static_cast<std::streamsize>(pixels.size()));
  if (!out) throw DataError("failed writing " + path.string());
}

}  // namespace gazetse
