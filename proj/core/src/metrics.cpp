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

#include "gazetse/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "gazetse/error.hpp"
#include "gazetse/parallel.hpp"

namespace gazetse {

namespace {

std::string fmt(double v, int precision = 6) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << v;
  return os.str();
}

void accumulate(MetricSummary& s, double v, double& sum) {
  if (std::isinf(v)) {
    ++s.inf_count;
  } else {
    sum += v;
    ++s.count;
  }
}

}  // namespace

const ConditionRow* MetricReport::find(const std::string& condition) const {
  for (const auto& row : rows)
    if (row.condition == condition) return &row;
  return nullptr;
}

std::string MetricReport::to_csv() const {
  std::ostringstream os;
  os << "condition,metric,mean,count,inf_count\n";
  const auto line = [&](const std::string& cond, const char* metric, const MetricSummary& s) {
    os << cond << ',' << metric << ',' << (s.count ? fmt(s.mean) : "nan") << ',' << s.count << ','
       << s.inf_count << '\n';
  };
  for (const auto& row : rows) {
    if (row.pesq) line(row.condition, "pesq", *row.pesq);
    line(row.condition, "stoi", row.stoi);
    line(row.condition, "si_sdr", row.si_sdr);
  }
  return os.str();
}

std::string MetricReport::scores_csv() const {
  const bool with_pesq =
      std::any_of(scores.begin(), scores.end(), [](const RecordScore& s) { return s.pesq.has_value(); });
  std::ostringstream os;
  os << "record_id,condition,stoi,si_sdr" << (with_pesq ? ",pesq" : "") << '\n';
  for (const auto& s : scores) {
    os << s.record_id << ',' << s.condition << ',' << fmt(s.stoi) << ',' << fmt(s.si_sdr);
    if (with_pesq) os << ',' << (s.pesq ? fmt(*s.pesq) : "nan");
    os << '\n';
  }
  return os.str();
}

std::string MetricReport::to_table() const {
  std::size_t name_width = 9;
  for (const auto& row : rows) name_width = std::max(name_width, row.condition.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(name_width)) << "Condition" << std::right
     << std::setw(9) << "PESQ" << std::setw(9) << "STOI" << std::setw(10) << "SI-SDR"
     << std::setw(6) << "N" << std::setw(6) << "inf" << '\n';
  const auto cell = [](const MetricSummary& s, int p) { return s.count ? fmt(s.mean, p) : "-"; };
  for (const auto& row : rows) {
    os << std::left << std::setw(static_cast<int>(name_width)) << row.condition << std::right
       << std::setw(9) << (row.pesq ? cell(*row.pesq, 3) : "-") << std::setw(9)
       << cell(row.stoi, 4) << std::setw(10) << cell(row.si_sdr, 2) << std::setw(6)
       << row.record_count << std::setw(6) << row.si_sdr.inf_count << '\n';
  }
  return os.str();
}

MetricReport summarize(std::vector<RecordScore> scores, std::vector<RecordFailure> failures,
                       std::span<const std::string> conditions) {
  const auto order = [&](const std::string& c) {
    return static_cast<std::size_t>(std::find(conditions.begin(), conditions.end(), c) -
                                    conditions.begin());
  };
  std::stable_sort(scores.begin(), scores.end(), [&](const RecordScore& a, const RecordScore& b) {
    if (a.record_id != b.record_id) return a.record_id < b.record_id;
    return order(a.condition) < order(b.condition);
  });
  std::stable_sort(failures.begin(), failures.end(),
                   [&](const RecordFailure& a, const RecordFailure& b) {
                     if (a.record_id != b.record_id) return a.record_id < b.record_id;
                     return order(a.condition) < order(b.condition);
                   });

  MetricReport report;
  for (const auto& cond : conditions) {
    ConditionRow row;
    row.condition = cond;
    double stoi_sum = 0.0, sdr_sum = 0.0, pesq_sum = 0.0;
    for (const auto& s : scores) {
      if (s.condition != cond) continue;
      ++row.record_count;
      accumulate(row.stoi, s.stoi, stoi_sum);
      accumulate(row.si_sdr, s.si_sdr, sdr_sum);
      if (s.pesq) {
        if (!row.pesq) row.pesq.emplace();
        accumulate(*row.pesq, *s.pesq, pesq_sum);
      }
    }
    if (row.record_count == 0) continue;
    if (row.stoi.count) row.stoi.mean = stoi_sum / static_cast<double>(row.stoi.count);
    if (row.si_sdr.count) row.si_sdr.mean = sdr_sum / static_cast<double>(row.si_sdr.count);
    if (row.pesq && row.pesq->count) row.pesq->mean = pesq_sum / static_cast<double>(row.pesq->count);
    report.rows.push_back(row);
  }
  report.scores = std::move(scores);
  report.failures = std::move(failures);
  return report;
}

MetricReport evaluate_set(std::span<const MixtureRecord> records,
                          std::span<const std::string> conditions, const EvalSource& source,
                          const EvalOptions& options) {
  if (conditions.empty()) throw Error("evaluate_set: no conditions requested");
  if (!source.reference || !source.estimate) throw Error("evaluate_set: incomplete EvalSource");

  struct Slot {
    std::vector<RecordScore> scores;
    std::vector<RecordFailure> failures;
  };
  std::vector<Slot> slots(records.size());
  parallel_for(records.size(), options.jobs, [&](std::size_t i) {
    const MixtureRecord& rec = records[i];
    Slot& slot = slots[i];
    Waveform reference;
    try {
      reference = source.reference(rec);
    } catch (const std::exception& e) {
      for (const auto& cond : conditions) slot.failures.push_back({rec.id, cond, e.what()});
      return;
    }
    for (const auto& cond : conditions) {
      try {
        const Waveform estimate = source.estimate(rec, cond);
        RecordScore score;
        score.record_id = rec.id;
        score.condition = cond;
        score.si_sdr = si_sdr(reference, estimate);
        score.stoi = stoi(reference, estimate, reference.rate);
        if (options.pesq) score.pesq = options.pesq->score(reference, estimate);
        slot.scores.push_back(std::move(score));
      } catch (const std::exception& e) {
        slot.failures.push_back({rec.id, cond, e.what()});
      }
    }
  });

  std::vector<RecordScore> scores;
  std::vector<RecordFailure> failures;
  for (auto& slot : slots) {
    std::move(slot.scores.begin(), slot.scores.end(), std::back_inserter(scores));
    std::move(slot.failures.begin(), slot.failures.end(), std::back_inserter(failures));
  }
  if (scores.empty()) {
    std::ostringstream os;
    os << "evaluation failed for every record";
    for (const auto& f : failures) os << "\n  " << f.record_id << " [" << f.condition << "]: " << f.message;
    throw DataError(os.str());
  }
  return summarize(std::move(scores), std::move(failures), conditions);
}

}  // namespace gazetse
