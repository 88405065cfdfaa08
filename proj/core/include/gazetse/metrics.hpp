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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gazetse/audio.hpp"
#include "gazetse/records.hpp"

namespace gazetse {

/// Scale-invariant SDR in dB, after removing the mean of both signals.
/// Returns +infinity when the estimate is an exact scaled copy of the
/// reference. Throws on length mismatch or an all-zero (after mean removal)
/// reference.
double si_sdr(const Waveform& reference, const Waveform& estimate);

/// Classic short-time objective intelligibility (Taal et al.): 10 kHz
/// analysis, 256-sample frames, 15 third-octave bands from 150 Hz, 30-frame
/// segments, -15 dB clipping, 40 dB silent-frame removal. Both signals are
/// resampled from `rate` first. Throws when fewer than 30 frames survive.
double stoi(const Waveform& reference, const Waveform& estimate, int rate);
inline double stoi(const Waveform& reference, const Waveform& estimate) {
  return stoi(reference, estimate, reference.rate);
}

/// Runs a user-supplied PESQ executable as `<command> <reference.wav>
/// <estimate.wav>` and parses the first number it prints.
struct PesqAdapter {
  std::string command;

  double score(const Waveform& reference, const Waveform& estimate) const;
};

struct MetricSummary {
  double mean = 0.0;           // over finite values only
  std::size_t count = 0;       // finite values averaged
  std::size_t inf_count = 0;   // +-inf values excluded from the mean
};

struct ConditionRow {
  std::string condition;
  std::size_t record_count = 0;
  MetricSummary stoi;
  MetricSummary si_sdr;
  std::optional<MetricSummary> pesq;
};

struct RecordScore {
  std::string record_id;
  std::string condition;
  double stoi = 0.0;
  double si_sdr = 0.0;
  std::optional<double> pesq;
};

struct RecordFailure {
  std::string record_id;
  std::string condition;
  std::string message;
};

struct MetricReport {
  std::vector<ConditionRow> rows;       // in the requested condition order
  std::vector<RecordScore> scores;      // sorted by record id, then condition order
  std::vector<RecordFailure> failures;  // same ordering

  const ConditionRow* find(const std::string& condition) const;
  /// condition,metric,mean,count,inf_count
  std::string to_csv() const;
  /// record_id,condition,stoi,si_sdr[,pesq]
  std::string scores_csv() const;
  /// Aligned plain-text table with one line per condition.
  std::string to_table() const;
};

/// Supplies audio for evaluation: the record's reference and the output of a
/// named condition for that record.
struct EvalSource {
  std::function<Waveform(const MixtureRecord&)> reference;
  std::function<Waveform(const MixtureRecord&, const std::string& condition)> estimate;
};

struct EvalOptions {
  std::optional<PesqAdapter> pesq;
  std::size_t jobs = 0;  // 0: default_jobs()
};

/// Scores every (record, condition). Per-record failures are collected in the
/// report; throws DataError only when nothing could be scored.
MetricReport evaluate_set(std::span<const MixtureRecord> records,
                          std::span<const std::string> conditions, const EvalSource& source,
                          const EvalOptions& options = {});

/// Aggregates per-record scores into condition rows.
MetricReport summarize(std::vector<RecordScore> scores, std::vector<RecordFailure> failures,
                       std::span<const std::string> conditions);

}  // namespace gazetse
