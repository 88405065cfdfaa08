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

#include <gtest/gtest.h>

#include <atomic>
#include <fstream>
#include <map>

#include "gazetse/error.hpp"
#include "gazetse/metrics.hpp"
#include "gazetse/parallel.hpp"
#include "gazetse/synth.hpp"
#include "oracles/support.hpp"

namespace gazetse {
namespace {

MixtureRecord record(const std::string& id) {
  MixtureRecord r;
  r.id = id;
  return r;
}

RecordScore score(const std::string& id, const std::string& cond, double stoi_v, double sdr) {
  RecordScore s;
  s.record_id = id;
  s.condition = cond;
  s.stoi = stoi_v;
  s.si_sdr = sdr;
  return s;
}

TEST(Summarize, MeansAndInfCounts) {
  const std::vector<std::string> conds{"mixed"};
  const auto rep = summarize({score("b", "mixed", 0.5, 6.0), score("a", "mixed", 0.7, 4.0),
                              score("c", "mixed", 0.9, INFINITY)},
                             {}, conds);
  ASSERT_EQ(rep.rows.size(), 1u);
  EXPECT_EQ(rep.rows[0].record_count, 3u);
  EXPECT_DOUBLE_EQ(rep.rows[0].si_sdr.mean, 5.0);
  EXPECT_EQ(rep.rows[0].si_sdr.count, 2u);
  EXPECT_EQ(rep.rows[0].si_sdr.inf_count, 1u);
  EXPECT_NEAR(rep.rows[0].stoi.mean, 0.7, 1e-15);
  EXPECT_EQ(rep.scores[0].record_id, "a");
  EXPECT_EQ(rep.scores[2].record_id, "c");
}

TEST(Summarize, OrderIndependent) {
  const std::vector<std::string> conds{"gaze_guided", "mixed"};
  std::vector<RecordScore> s;
  for (int i = 0; i < 30; ++i) {
    s.push_back(score("r" + std::to_string(i), "mixed", 0.01 * i, 0.1 * i * i));
    s.push_back(score("r" + std::to_string(i), "gaze_guided", 0.02 * i, -0.3 * i));
  }
  auto reversed = s;
  std::reverse(reversed.begin(), reversed.end());
  const auto a = summarize(s, {}, conds), b = summarize(reversed, {}, conds);
  EXPECT_EQ(a.to_csv(), b.to_csv());
  EXPECT_EQ(a.scores_csv(), b.scores_csv());
  EXPECT_EQ(a.rows[0].condition, "gaze_guided");
}

TEST(MetricReport, CsvAndTable) {
  const std::vector<std::string> conds{"mixed", "fixed_A"};
  const auto rep = summarize({score("x", "mixed", 0.5, 1.25), score("x", "fixed_A", 0.75, INFINITY)},
                             {}, conds);
  EXPECT_EQ(rep.to_csv(),
            "condition,metric,mean,count,inf_count\n"
            "mixed,stoi,0.500000,1,0\n"
            "mixed,si_sdr,1.250000,1,0\n"
            "fixed_A,stoi,0.750000,1,0\n"
            "fixed_A,si_sdr,nan,0,1\n");
  EXPECT_EQ(rep.scores_csv(),
            "record_id,condition,stoi,si_sdr\n"
            "x,mixed,0.500000,1.250000\n"
            "x,fixed_A,0.750000,inf\n");
  const auto table = rep.to_table();
  EXPECT_NE(table.find("Condition"), std::string::npos);
  EXPECT_NE(table.find("SI-SDR"), std::string::npos);
  EXPECT_NE(table.find("1.25"), std::string::npos);
  EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 3);
  ASSERT_NE(rep.find("fixed_A"), nullptr);
  EXPECT_EQ(rep.find("gaze_guided"), nullptr);
}

TEST(EvaluateSet, IdentityRecord) {
  const auto x = synth_voice(random_voice(1, 2.0), 2);
  EvalSource src;
  src.reference = [&](const MixtureRecord&) { return x; };
  src.estimate = [&](const MixtureRecord&, const std::string&) { return x; };
  const std::vector<MixtureRecord> recs{record("only")};
  const std::vector<std::string> conds{"mixed"};
  const auto rep = evaluate_set(recs, conds, src);
  ASSERT_EQ(rep.rows.size(), 1u);
  EXPECT_NEAR(rep.rows[0].stoi.mean, 1.0, 1e-6);
  EXPECT_EQ(rep.rows[0].si_sdr.inf_count, 1u);
  EXPECT_EQ(rep.rows[0].si_sdr.count, 0u);
}

TEST(EvaluateSet, CollectsFailuresUnlessAllFail) {
  const auto x = synth_voice(random_voice(1, 2.0), 2);
  const auto noise = testing::white_noise(x.size(), 5);
  EvalSource src;
  src.reference = [&](const MixtureRecord& r) {
    if (r.id == "broken") throw DataError("no reference audio");
    return x;
  };
  src.estimate = [&](const MixtureRecord& r, const std::string&) {
    if (r.id == "short") return trim_or_pad(x, x.size() - 10);
    return add_noise_snr(x, noise, 5.0);
  };
  const std::vector<MixtureRecord> recs{record("ok"), record("broken"), record("short")};
  const std::vector<std::string> conds{"mixed", "fixed_A"};
  const auto rep = evaluate_set(recs, conds, src, {std::nullopt, 2});
  EXPECT_EQ(rep.scores.size(), 2u);
  ASSERT_EQ(rep.failures.size(), 4u);
  EXPECT_EQ(rep.failures[0].record_id, "broken");
  EXPECT_EQ(rep.failures[2].record_id, "short");
  EXPECT_NE(rep.failures[2].message.find("samples"), std::string::npos);

  const std::vector<MixtureRecord> bad{record("broken"), record("short")};
  EXPECT_THROW(evaluate_set(bad, conds, src), DataError);
  EXPECT_THROW(evaluate_set(recs, std::vector<std::string>{}, src), Error);
}

TEST(EvaluateSet, JobsDoNotChangeResults) {
  std::vector<MixtureRecord> recs;
  std::map<std::string, Waveform> refs;
  for (int i = 0; i < 6; ++i) {
    recs.push_back(record("r" + std::to_string(i)));
    refs[recs.back().id] = synth_voice(random_voice(10 + i, 1.5), 3 + i);
  }
  EvalSource src;
  src.reference = [&](const MixtureRecord& r) { return refs.at(r.id); };
  src.estimate = [&](const MixtureRecord& r, const std::string& c) {
    const auto& x = refs.at(r.id);
    return add_noise_snr(x, testing::white_noise(x.size(), c.size()), c == "mixed" ? 0.0 : 10.0);
  };
  const std::vector<std::string> conds{"mixed", "gaze_guided"};
  const auto one = evaluate_set(recs, conds, src, {std::nullopt, 1});
  const auto four = evaluate_set(recs, conds, src, {std::nullopt, 4});
  EXPECT_EQ(one.to_csv(), four.to_csv());
  EXPECT_EQ(one.scores_csv(), four.scores_csv());
  EXPECT_GT(one.find("gaze_guided")->si_sdr.mean, one.find("mixed")->si_sdr.mean);
}

TEST(PesqAdapter, RunsCommandAndParsesNumber) {
  const auto dir = testing::scratch_dir("pesq");
  const auto script = dir / "fake_pesq.sh";
  {
    std::ofstream out(script);
    out << "#!/bin/sh\n[ -f \"$1\" ] && [ -f \"$2\" ] || exit 3\necho \"score: 3.25 MOS\"\n";
  }
  std::filesystem::permissions(script, std::filesystem::perms::owner_all);
  const auto x = synth_voice(random_voice(1, 1.0), 2);
  EXPECT_DOUBLE_EQ((PesqAdapter{script.string()}).score(x, x), 3.25);

  const auto failing = dir / "fail.sh";
  {
    std::ofstream out(failing);
    out << "#!/bin/sh\nexit 1\n";
  }
  std::filesystem::permissions(failing, std::filesystem::perms::owner_all);
  EXPECT_THROW((PesqAdapter{failing.string()}).score(x, x), Error);
}

TEST(Parallel, RunsEveryIndexAndRethrows) {
  std::vector<std::atomic<int>> hits(100);
  parallel_for(100, 4, [&](std::size_t i) { hits[i]++; });
  for (auto& h : hits) EXPECT_EQ(h.load(), 1);
  EXPECT_THROW(parallel_for(10, 3,
                            [](std::size_t i) {
                              if (i == 7) throw DataError("boom");
                            }),
               DataError);
  EXPECT_GE(default_jobs(), 1u);
}

}  // namespace
}  // namespace gazetse
