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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gazetse/attention.hpp"
#include "gazetse/audio.hpp"
#include "gazetse/metrics.hpp"
#include "gazetse/records.hpp"
#include "gazetse/stft.hpp"

namespace gazetse {

inline const std::vector<std::string>& all_conditions() {
  static const std::vector<std::string> names{"mixed", "fixed_A", "fixed_B", "gaze_guided"};
  return names;
}

/// Experiment settings. The text form is one key=value per line; '#' starts
/// a comment. Keys: manifest, conditions (comma list), gamma, tau,
/// gaze_region_fraction, debounce_k, window_length, hop, fft_size, out,
/// seed, spectrograms, pesq_command, jobs.
struct ExperimentConfig {
  std::filesystem::path manifest;
  std::vector<std::string> conditions = all_conditions();
  AttentionConfig attention;
  std::size_t debounce_k = 1;
  StftConfig stft;
  std::filesystem::path out_dir = "experiment_out";
  std::uint64_t seed = 0;
  std::size_t spectrograms = 0;  // records to render as PGM, sampled by seed
  std::optional<std::string> pesq_command;
  std::size_t jobs = 0;

  void validate() const;
  /// Applies one key=value setting; throws on unknown keys or bad values.
  void set(std::string_view key, std::string_view value);
  /// Every setting with defaults expanded, in a fixed order.
  std::string to_text() const;
};

/// Parses key=value lines on top of the defaults. Relative manifest and out
/// paths are resolved against `base_dir`.
ExperimentConfig parse_experiment_config(std::string_view text,
                                         const std::filesystem::path& base_dir = {});
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// Output of one condition for one record: the mixture itself, an oracle
/// extraction fixed on track 0 or 1, or extraction gated by the attention
/// trace recovered from the record's scene.
Waveform render_condition(const MixtureRecord& record, const std::string& condition,
                          const ExperimentConfig& cfg);

/// Selection trace driving the gaze_guided condition for a record.
SelectionTrace record_selection(const MixtureRecord& record, std::size_t n_samples,
                                const ExperimentConfig& cfg);

/// Renders and scores every record and condition, then writes report.csv,
/// report.txt, scores.csv and optional spectrogram PGMs into cfg.out_dir.
MetricReport run_experiment(const ExperimentConfig& cfg);

}  // namespace gazetse
