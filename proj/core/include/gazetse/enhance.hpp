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
#include <filesystem>
#include <span>

#include "gazetse/attention.hpp"
#include "gazetse/audio.hpp"
#include "gazetse/stft.hpp"

namespace gazetse {

/// Oracle target-speaker extraction gated by a selection trace. STFT frame t
/// belongs to video frame floor(t * hop / 640); where that frame selects
/// track i the mixture is masked with the IRM of clean source i, where it
/// selects nothing the mixture passes through unchanged.
Waveform gaze_gated_enhance(const Waveform& mixture, std::span<const Waveform> clean_sources,
                            const SelectionTrace& selection, const StftConfig& cfg = {});

/// gaze_gated_enhance with the same track selected on every frame.
Waveform fixed_target_enhance(const Waveform& mixture, std::span<const Waveform> clean_sources,
                              std::size_t fixed, const StftConfig& cfg = {});

/// Writes |S| as a binary 8-bit PGM: 20*log10(|S| + 1e-8), min-max scaled to
/// 0..255 per image. Time runs left to right, frequency bottom to top.
void write_spectrogram_pgm(const std::filesystem::path& path, const ComplexSpectrogram& spec);

}  // namespace gazetse
