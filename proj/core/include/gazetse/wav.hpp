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

#include <filesystem>

#include "gazetse/audio.hpp"

namespace gazetse {

// RIFF/WAVE, 16-bit signed PCM, mono. Samples map to amplitudes by division
// by 32768; writing multiplies by 32768, rounds, and clamps to +-32767.
Waveform read_wav(const std::filesystem::path& path);
void write_wav(const std::filesystem::path& path, const Waveform& wave);

/// Quantizes amplitudes the way write_wav does, so in-memory results can be
/// compared with files on disk.
Waveform quantize_pcm16(const Waveform& wave);

}  // namespace gazetse
