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

#include "gazetse_cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gazetse/attention.hpp"
#include "gazetse/dataset.hpp"
#include "gazetse/enhance.hpp"
#include "gazetse/error.hpp"
#include "gazetse/experiment.hpp"
#include "gazetse/metrics.hpp"
#include "gazetse/rng.hpp"
#include "gazetse/scene.hpp"
#include "gazetse/synth.hpp"
#include "gazetse/wav.hpp"

namespace gazetse::cli {

namespace fs = std::filesystem;

namespace {

struct Common {
  std::uint64_t seed = 0;
  std::string out;
  std::string config;
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--seed", common.seed, "Seed for every random draw");
  cmd->add_option("--out", common.out, "Output file or directory");
  cmd->add_option("--config", common.config, "key=value settings file");
}

struct AttentionFlags {
  double gamma = 0.75;
  double tau = 0.15;
  double region = 0.2;
  std::size_t debounce_k = 1;
};

void add_attention(CLI::App* cmd, AttentionFlags& a) {
  cmd->add_option("--gamma", a.gamma, "Distance/overlap weight of the matching score")
      ->capture_default_str();
  cmd->add_option("--tau", a.tau, "Minimum score for a face to be selected")->capture_default_str();
  cmd->add_option("--gaze-region-fraction", a.region,
                  "Gaze window side as a fraction of frame height")
      ->capture_default_str();
  cmd->add_option("--debounce-k", a.debounce_k, "Frames a new target must persist")
      ->capture_default_str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataError("cannot write " + path);
  f << text;
  if (!f) throw DataError("failed writing " + path);
}

// Expands `--config FILE` (key=value lines) into `--key=value` tokens placed
// directly after the subcommand, so explicit flags later on the command line
// take precedence.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  if (args.size() < 2 || args[1] == "experiment") return args;
  std::optional<std::string> path;
  for (std::size_t i = 2; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (!path) return args;
  std::ifstream in(*path);
  if (!in) throw DataError("cannot read config " + *path);
  std::vector<std::string> extra;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto eq = line.find('=');
    const auto strip = [](std::string s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
      return s;
    };
    if (eq == std::string::npos) {
      if (!strip(line).empty()) throw CLI::ValidationError("config", "expected key=value: " + line);
      continue;
    }
    std::string key = strip(line.substr(0, eq));
    for (char& c : key)
      if (c == '_') c = '-';
    extra.push_back("--" + key + "=" + strip(line.substr(eq + 1)));
  }
  std::vector<std::string> out(args.begin(), args.begin() + 2);
  out.insert(out.end(), extra.begin(), extra.end());
  out.insert(out.end(), args.begin() + 2, args.end());
  return out;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void print_failures(const MetricReport& report, std::ostream& err) {
  for (const auto& f : report.failures)
    err << "error: " << f.record_id << " [" << f.condition << "]: " << f.message << '\n';
}

}  // namespace

int dispatch(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaze-guided target speaker selection, dataset and evaluation toolkit", "gazetse"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  // scene ---------------------------------------------------------------
  Common scene_common;
  SceneConfig scene_cfg;
  std::optional<double> scene_switch;
  std::string scene_trace;
  AttentionFlags scene_att;
  auto* scene = app.add_subcommand("scene", "Generate a synthetic scene manifest");
  add_common(scene, scene_common);
  scene->add_option("--duration", scene_cfg.duration, "Clip length in seconds")->capture_default_str();
  scene->add_option("--n-speakers", scene_cfg.n_speakers)->capture_default_str();
  scene->add_option("--frame-width", scene_cfg.frame_width)->capture_default_str();
  scene->add_option("--frame-height", scene_cfg.frame_height)->capture_default_str();
  scene->add_option("--face-size", scene_cfg.face_size_fraction, "Face side / frame height")
      ->capture_default_str();
  scene->add_option("--jitter", scene_cfg.jitter_sigma, "Gaze jitter sigma, pixels")
      ->capture_default_str();
  scene->add_option("--box-motion", scene_cfg.box_motion_sigma, "Face drift sigma, pixels/frame")
      ->capture_default_str();
  scene->add_option("--switch-time", scene_switch, "Seconds at which attention switches");
  scene->add_option("--initial-target", scene_cfg.initial_target)->capture_default_str();
  scene->add_option("--trace", scene_trace, "Also write the recovered selection trace here");
  add_attention(scene, scene_att);

  // pair ----------------------------------------------------------------
  Common pair_common;
  std::string pair_input;
  auto* pair = app.add_subcommand("pair", "Pair utterances from a CSV list");
  add_common(pair, pair_common);
  pair->add_option("--input", pair_input, "CSV: id,speaker_id,audio_path,duration")->required();

  // build ---------------------------------------------------------------
  Common build_common;
  std::string build_input;
  BuildOptions build_opts;
  bool build_no_scenes = false;
  auto* build = app.add_subcommand("build", "Build a two-talker mixture dataset");
  add_common(build, build_common);
  build->add_option("--input", build_input, "CSV: id,speaker_id,audio_path,duration")->required();
  build->add_option("--switch-fraction", build_opts.switch_fraction,
                    "Fraction of pairs built as speaker-switch records")
      ->capture_default_str();
  build->add_option("--gap", build_opts.gap_seconds, "Switch gap in seconds")->capture_default_str();
  build->add_flag("--no-scenes", build_no_scenes, "Skip scene generation");
  build->add_option("--jitter", build_opts.scene.jitter_sigma)->capture_default_str();
  build->add_option("--box-motion", build_opts.scene.box_motion_sigma)->capture_default_str();
  build->add_option("--face-size", build_opts.scene.face_size_fraction)->capture_default_str();
  build->add_option("--jobs", build_opts.jobs, "Worker threads (0: auto)");

  // switch --------------------------------------------------------------
  Common switch_common;
  std::string sw_mixture, sw_clean_a, sw_clean_b, sw_reference_out;
  double sw_gap = kDefaultSwitchGapSeconds;
  auto* sw = app.add_subcommand("switch", "Build a speaker-switch mixture and reference");
  add_common(sw, switch_common);
  sw->add_option("--mixture", sw_mixture, "Two-talker mixture WAV")->required();
  sw->add_option("--gap", sw_gap, "Silent gap in seconds (multiple of 0.04)")->capture_default_str();
  sw->add_option("--clean-a", sw_clean_a, "Clean talker attended before the gap");
  sw->add_option("--clean-b", sw_clean_b, "Clean talker attended after the gap");
  sw->add_option("--reference-out", sw_reference_out, "Where to write the switch reference");

  // enhance -------------------------------------------------------------
  Common enh_common;
  std::string enh_manifest, enh_record, enh_condition = "gaze_guided", enh_trace;
  AttentionFlags enh_att;
  auto* enh = app.add_subcommand("enhance", "Render one condition for one record");
  add_common(enh, enh_common);
  enh->add_option("--manifest", enh_manifest, "Dataset manifest")->required();
  enh->add_option("--record", enh_record, "Record id")->required();
  enh->add_option("--condition", enh_condition, "mixed, fixed_A, fixed_B or gaze_guided")
      ->capture_default_str();
  enh->add_option("--trace", enh_trace, "Write the selection trace used (gaze_guided)");
  add_attention(enh, enh_att);

  // eval ----------------------------------------------------------------
  Common eval_common;
  std::string eval_list, eval_manifest, eval_conditions, eval_pesq;
  std::size_t eval_jobs = 0;
  auto* eval = app.add_subcommand("eval", "Score estimates against references");
  add_common(eval, eval_common);
  eval->add_option("--list", eval_list, "CSV: id,condition,reference_path,estimate_path");
  eval->add_option("--manifest", eval_manifest, "Dataset manifest (renders conditions)");
  eval->add_option("--conditions", eval_conditions, "Comma list for --manifest mode");
  eval->add_option("--pesq-command", eval_pesq, "External PESQ executable");
  eval->add_option("--jobs", eval_jobs);

  // experiment ----------------------------------------------------------
  Common exp_common;
  std::string exp_manifest, exp_conditions, exp_pesq;
  std::optional<std::size_t> exp_spectrograms, exp_jobs;
  auto* exp = app.add_subcommand("experiment", "Run every condition over a dataset and report");
  exp->add_option("--seed", exp_common.seed);
  exp->add_option("--out", exp_common.out, "Report directory");
  exp->add_option("--config", exp_common.config, "Experiment config (key=value lines)");
  exp->add_option("--manifest", exp_manifest);
  exp->add_option("--conditions", exp_conditions);
  exp->add_option("--spectrograms", exp_spectrograms, "Records to render as PGM");
  exp->add_option("--pesq-command", exp_pesq);
  exp->add_option("--jobs", exp_jobs);

  // spectrogram ---------------------------------------------------------
  Common spec_common;
  std::string spec_input;
  auto* spec = app.add_subcommand("spectrogram", "Render a WAV file's spectrogram as PGM");
  add_common(spec, spec_common);
  spec->add_option("--input", spec_input, "WAV file")->required();

  // synth ---------------------------------------------------------------
  Common synth_common;
  int synth_speakers = 4, synth_per_speaker = 3;
  double synth_min = 2.0, synth_max = 4.0;
  auto* synth = app.add_subcommand("synth", "Write a synthetic voiced-utterance corpus");
  add_common(synth, synth_common);
  synth->add_option("--speakers", synth_speakers)->capture_default_str();
  synth->add_option("--per-speaker", synth_per_speaker)->capture_default_str();
  synth->add_option("--min-duration", synth_min)->capture_default_str();
  synth->add_option("--max-duration", synth_max)->capture_default_str();

  try {
    const auto args = expand_config(raw_args);
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }

  const auto apply_attention = [](const AttentionFlags& f, AttentionConfig& a) {
    a.gamma = f.gamma;
    a.min_score_tau = f.tau;
    a.gaze_region_fraction = f.region;
  };

  try {
    if (*scene) {
      scene_cfg.switch_time = scene_switch;
      scene_cfg.seed = scene_common.seed;
      const Scene s = generate_scene(scene_cfg);
      write_text(scene_common.out, scene_to_manifest(s), out);
      if (!scene_trace.empty()) {
        AttentionConfig att;
        apply_attention(scene_att, att);
        att.frame_width = scene_cfg.frame_width;
        att.frame_height = scene_cfg.frame_height;
        write_text(scene_trace,
                   selection_to_text(debounce(track_attention(s, att), scene_att.debounce_k)), out);
      }
    } else if (*pair) {
      const auto records = read_utterance_csv(pair_input);
      const Pairing p = pair_utterances(records);
      for (const auto& id : p.dropped) err << "warning: dropped " << id << '\n';
      std::ostringstream os;
      os << "target_id,interferer_id\n";
      for (const auto& dp : p.pairs) os << dp.target.id << ',' << dp.interferer.id << '\n';
      write_text(pair_common.out, os.str(), out);
    } else if (*build) {
      if (build_common.out.empty()) throw CLI::RequiredError("--out");
      const auto records = read_utterance_csv(build_input);
      build_opts.seed = build_common.seed;
      build_opts.with_scenes = !build_no_scenes;
      const BuildResult r = build_dataset(records, build_common.out, build_opts);
      for (const auto& e : r.errors) err << "error: " << e << '\n';
      out << "built " << r.records.size() << " records -> " << r.manifest_path.string() << '\n';
    } else if (*sw) {
      if (switch_common.out.empty()) throw CLI::RequiredError("--out");
      const Waveform mix = read_wav(sw_mixture);
      write_wav(switch_common.out, build_switch_mixture(mix, sw_gap));
      if (!sw_clean_a.empty() || !sw_clean_b.empty()) {
        if (sw_clean_a.empty() || sw_clean_b.empty() || sw_reference_out.empty())
          throw CLI::ValidationError("switch",
                                     "--clean-a, --clean-b and --reference-out go together");
        write_wav(sw_reference_out,
                  build_switch_reference(read_wav(sw_clean_a), read_wav(sw_clean_b), sw_gap));
      }
    } else if (*enh) {
      if (enh_common.out.empty()) throw CLI::RequiredError("--out");
      ExperimentConfig cfg;
      apply_attention(enh_att, cfg.attention);
      cfg.debounce_k = enh_att.debounce_k;
      cfg.seed = enh_common.seed;
      cfg.validate();
      const auto records = read_manifest(enh_manifest);
      const auto it = std::find_if(records.begin(), records.end(),
                                   [&](const MixtureRecord& r) { return r.id == enh_record; });
      if (it == records.end()) throw DataError("no record '" + enh_record + "' in manifest");
      write_wav(enh_common.out, render_condition(*it, enh_condition, cfg));
      if (!enh_trace.empty())
        write_text(enh_trace,
                   selection_to_text(
                       record_selection(*it, read_wav(it->mixture_path).size(), cfg)),
                   out);
    } else if (*eval) {
      if (eval_list.empty() == eval_manifest.empty())
        throw CLI::ValidationError("eval", "give exactly one of --list or --manifest");
      EvalOptions options;
      options.jobs = eval_jobs;
      if (!eval_pesq.empty()) options.pesq = PesqAdapter{eval_pesq};
      MetricReport report;
      if (!eval_list.empty()) {
        std::ifstream in(eval_list);
        if (!in) throw DataError("cannot read " + eval_list);
        const fs::path base = fs::path(eval_list).parent_path();
        std::string line;
        std::getline(in, line);
        if (line.rfind("id,condition,reference_path,estimate_path", 0) != 0)
          throw DataError(eval_list + ": header must be id,condition,reference_path,estimate_path");
        std::vector<MixtureRecord> records;
        std::vector<std::string> conditions;
        std::map<std::pair<std::string, std::string>, fs::path> estimates;
        while (std::getline(in, line)) {
          if (!line.empty() && line.back() == '\r') line.pop_back();
          if (line.empty()) continue;
          const auto cells = split_list(line);
          if (cells.size() != 4) throw DataError(eval_list + ": expected 4 fields: " + line);
          const auto resolve = [&](const std::string& p) {
            return fs::path(p).is_absolute() ? fs::path(p) : base / p;
          };
          if (std::find(conditions.begin(), conditions.end(), cells[1]) == conditions.end())
            conditions.push_back(cells[1]);
          estimates[{cells[0], cells[1]}] = resolve(cells[3]);
          const bool known = std::any_of(records.begin(), records.end(),
                                         [&](const MixtureRecord& r) { return r.id == cells[0]; });
          if (!known) {
            MixtureRecord r;
            r.id = cells[0];
            r.reference_path = resolve(cells[2]);
            records.push_back(std::move(r));
          }
        }
        EvalSource source;
        source.reference = [](const MixtureRecord& r) { return read_wav(r.reference_path); };
        source.estimate = [&](const MixtureRecord& r, const std::string& c) {
          const auto it = estimates.find({r.id, c});
          if (it == estimates.end()) throw DataError("no estimate listed");
          return read_wav(it->second);
        };
        report = evaluate_set(records, conditions, source, options);
      } else {
        ExperimentConfig cfg;
        cfg.seed = eval_common.seed;
        if (!eval_conditions.empty()) cfg.conditions = split_list(eval_conditions);
        cfg.validate();
        const auto records = read_manifest(eval_manifest);
        EvalSource source;
        source.reference = [](const MixtureRecord& r) { return read_wav(r.reference_path); };
        source.estimate = [&](const MixtureRecord& r, const std::string& c) {
          return render_condition(r, c, cfg);
        };
        report = evaluate_set(records, cfg.conditions, source, options);
      }
      print_failures(report, err);
      out << report.to_table();
      if (!eval_common.out.empty()) {
        fs::create_directories(eval_common.out);
        write_text((fs::path(eval_common.out) / "report.csv").string(), report.to_csv(), out);
        write_text((fs::path(eval_common.out) / "scores.csv").string(), report.scores_csv(), out);
      }
    } else if (*exp) {
      ExperimentConfig cfg =
          exp_common.config.empty() ? ExperimentConfig{} : load_experiment_config(exp_common.config);
      if (exp->count("--seed")) cfg.seed = exp_common.seed;
      if (!exp_common.out.empty()) cfg.out_dir = exp_common.out;
      if (!exp_manifest.empty()) cfg.manifest = exp_manifest;
      if (!exp_conditions.empty()) cfg.conditions = split_list(exp_conditions);
      if (exp_spectrograms) cfg.spectrograms = *exp_spectrograms;
      if (!exp_pesq.empty()) cfg.pesq_command = exp_pesq;
      if (exp_jobs) cfg.jobs = *exp_jobs;
      if (cfg.manifest.empty()) throw CLI::RequiredError("manifest (flag or config key)");
      const MetricReport report = run_experiment(cfg);
      print_failures(report, err);
      out << report.to_table();
    } else if (*spec) {
      if (spec_common.out.empty()) throw CLI::RequiredError("--out");
      write_spectrogram_pgm(spec_common.out, stft(read_wav(spec_input)));
    } else if (*synth) {
      if (synth_common.out.empty()) throw CLI::RequiredError("--out");
      if (synth_speakers < 2 || synth_per_speaker < 1 || !(synth_min > 0.0) ||
          synth_max < synth_min)
        throw CLI::ValidationError("synth", "need >= 2 speakers and 0 < min <= max duration");
      const fs::path dir(synth_common.out);
      fs::create_directories(dir / "wav");
      Rng rng(synth_common.seed);
      std::vector<UtteranceRecord> records;
      for (int s = 0; s < synth_speakers; ++s) {
        const std::uint64_t speaker_seed = rng.next_u64();
        for (int u = 0; u < synth_per_speaker; ++u) {
          const double dur = std::round(rng.uniform(synth_min, synth_max) * 100.0) / 100.0;
          const Waveform w = synth_voice(random_voice(speaker_seed, dur), rng.next_u64());
          UtteranceRecord r;
          r.speaker_id = "spk" + std::to_string(s);
          r.id = r.speaker_id + "_u" + std::to_string(u);
          r.audio_path = dir / "wav" / (r.id + ".wav");
          r.duration = w.duration();
          write_wav(r.audio_path, w);
          records.push_back(std::move(r));
        }
      }
      write_utterance_csv(dir / "utterances.csv", records);
      out << "wrote " << records.size() << " utterances -> " << (dir / "utterances.csv").string()
          << '\n';
    }
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace gazetse::cli
