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

#include "gazetse/experiment.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "gazetse/enhance.hpp"
#include "gazetse/error.hpp"
#include "gazetse/dataset.hpp"
#include "gazetse/rng.hpp"
#include "gazetse/scene.hpp"
#include "gazetse/wav.hpp"

namespace gazetse {

namespace fs = std::filesystem;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc{} || res.ptr != value.data() + value.size())
    throw Error("config: bad value for " + std::string(key) + ": '" + std::string(value) + "'");
  return out;
}

std::string shortest(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<Waveform> load_sources(const MixtureRecord& record) {
  if (record.source_paths.size() < 2)
    throw DataError("record " + record.id + " lists fewer than two clean sources");
  std::vector<Waveform> sources;
  for (const auto& p : record.source_paths) sources.push_back(read_wav(p));
  return sources;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (conditions.empty()) throw Error("config: at least one condition is required");
  for (const auto& c : conditions)
    if (std::find(all_conditions().begin(), all_conditions().end(), c) == all_conditions().end())
      throw Error("config: unknown condition '" + c + "'");
  attention.validate();
  stft.validate();
  if (debounce_k < 1) throw Error("config: debounce_k must be at least 1");
}

void ExperimentConfig::set(std::string_view key, std::string_view value) {
  if (key == "manifest") {
    manifest = std::string(value);
  } else if (key == "conditions") {
    conditions.clear();
    while (!value.empty()) {
      const auto comma = value.find(',');
      const auto item = trim(value.substr(0, comma));
      if (!item.empty()) conditions.emplace_back(item);
      value = comma == std::string_view::npos ? std::string_view{} : value.substr(comma + 1);
    }
  } else if (key == "gamma") {
    attention.gamma = parse_number<double>(key, value);
  } else if (key == "tau") {
    attention.min_score_tau = parse_number<double>(key, value);
  } else if (key == "gaze_region_fraction") {
    attention.gaze_region_fraction = parse_number<double>(key, value);
  } else if (key == "debounce_k") {
    debounce_k = parse_number<std::size_t>(key, value);
  } else if (key == "window_length") {
    stft.window_length = parse_number<std::size_t>(key, value);
  } else if (key == "hop") {
    stft.hop = parse_number<std::size_t>(key, value);
  } else if (key == "fft_size") {
    stft.fft_size = parse_number<std::size_t>(key, value);
  } else if (key == "out") {
    out_dir = std::string(value);
  } else if (key == "seed") {
    seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "spectrograms") {
    spectrograms = parse_number<std::size_t>(key, value);
  } else if (key == "pesq_command") {
    if (value.empty()) {
      pesq_command.reset();
    } else {
      pesq_command = std::string(value);
    }
  } else if (key == "jobs") {
    jobs = parse_number<std::size_t>(key, value);
  } else {
    throw Error("config: unknown key '" + std::string(key) + "'");
  }
}

std::string ExperimentConfig::to_text() const {
  std::ostringstream os;
  std::string conds;
  for (const auto& c : conditions) conds += (conds.empty() ? "" : ",") + c;
  os << "manifest=" << manifest.generic_string() << '\n'
     << "conditions=" << conds << '\n'
     << "gamma=" << shortest(attention.gamma) << '\n'
     << "tau=" << shortest(attention.min_score_tau) << '\n'
     << "gaze_region_fraction=" << shortest(attention.gaze_region_fraction) << '\n'
     << "debounce_k=" << debounce_k << '\n'
     << "window_length=" << stft.window_length << '\n'
     << "hop=" << stft.hop << '\n'
     << "fft_size=" << stft.fft_size << '\n'
     << "out=" << out_dir.generic_string() << '\n'
     << "seed=" << seed << '\n'
     << "spectrograms=" << spectrograms << '\n'
     << "pesq_command=" << pesq_command.value_or("") << '\n';
  return os.str();
}

ExperimentConfig parse_experiment_config(std::string_view text, const fs::path& base_dir) {
  ExperimentConfig cfg;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw Error("config line " + std::to_string(line_no) + ": expected key=value");
    cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  if (!base_dir.empty()) {
    if (!cfg.manifest.empty() && cfg.manifest.is_relative()) cfg.manifest = base_dir / cfg.manifest;
    if (cfg.out_dir.is_relative()) cfg.out_dir = base_dir / cfg.out_dir;
  }
  return cfg;
}

ExperimentConfig load_experiment_config(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_experiment_config(buf.str(), path.parent_path());
}

SelectionTrace record_selection(const MixtureRecord& record, std::size_t n_samples,
                                const ExperimentConfig& cfg) {
  Scene scene;
  if (record.scene_ref) {
    scene = load_scene(*record.scene_ref);
  } else {
    SceneConfig sc;
    sc.duration = static_cast<double>(video_frames_covering(n_samples)) / kVideoFps;
    if (record.switch_info)
      sc.switch_time = (static_cast<double>(record.switch_info->switch_frame) + 0.5) / kVideoFps;
    sc.seed = cfg.seed ^ fnv1a(record.id);
    scene = generate_scene(sc);
  }
  AttentionConfig att = cfg.attention;
  att.frame_width = scene.config.frame_width;
  att.frame_height = scene.config.frame_height;
  SelectionTrace trace = debounce(track_attention(scene, att), cfg.debounce_k);

  const std::size_t needed = video_frames_covering(n_samples);
  if (trace.per_frame.empty()) trace.per_frame.push_back(std::nullopt);
  while (trace.size() < needed) trace.per_frame.push_back(trace.per_frame.back());
  return trace;
}

Waveform render_condition(const MixtureRecord& record, const std::string& condition,
                          const ExperimentConfig& cfg) {
  const Waveform mixture = read_wav(record.mixture_path);
  if (condition == "mixed") return mixture;
  const auto sources = load_sources(record);
  if (condition == "fixed_A") return fixed_target_enhance(mixture, sources, 0, cfg.stft);
  if (condition == "fixed_B") return fixed_target_enhance(mixture, sources, 1, cfg.stft);
  if (condition == "gaze_guided")
    return gaze_gated_enhance(mixture, sources, record_selection(record, mixture.size(), cfg),
                              cfg.stft);
  throw Error("unknown condition '" + condition + "'");
}

MetricReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto records = read_manifest(cfg.manifest);
  if (records.empty()) throw DataError("manifest lists no records");

  std::error_code ec;
  fs::create_directories(cfg.out_dir, ec);
  if (ec) throw DataError("cannot create " + cfg.out_dir.string() + ": " + ec.message());

  EvalSource source;
  source.reference = [](const MixtureRecord& r) { return read_wav(r.reference_path); };
  source.estimate = [&cfg](const MixtureRecord& r, const std::string& c) {
    return render_condition(r, c, cfg);
  };
  EvalOptions options;
  options.jobs = cfg.jobs;
  if (cfg.pesq_command) options.pesq = PesqAdapter{*cfg.pesq_command};
  const MetricReport report = evaluate_set(records, cfg.conditions, source, options);

  const auto write = [](const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw DataError("cannot write " + p.string());
    out << text;
  };
  write(cfg.out_dir / "report.csv", report.to_csv());
  write(cfg.out_dir / "scores.csv", report.scores_csv());
  std::ostringstream txt;
  txt << "# resolved config\n" << cfg.to_text() << "\n# results\n" << report.to_table();
  if (!report.failures.empty()) {
    txt << "\n# failures\n";
    for (const auto& f : report.failures)
      txt << f.record_id << " [" << f.condition << "]: " << f.message << '\n';
  }
  write(cfg.out_dir / "report.txt", txt.str());

  if (cfg.spectrograms > 0) {
    std::vector<std::size_t> order(records.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    Rng rng(cfg.seed);
    for (std::size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[rng.next_u64() % i]);
    order.resize(std::min(cfg.spectrograms, order.size()));
    std::sort(order.begin(), order.end());

    const fs::path dir = cfg.out_dir / "spectrograms";
    fs::create_directories(dir, ec);
    for (std::size_t i : order) {
      const auto& r = records[i];
      write_spectrogram_pgm(dir / (r.id + "_reference.pgm"),
                            stft(read_wav(r.reference_path), cfg.stft));
      for (const auto& c : cfg.conditions)
        write_spectrogram_pgm(dir / (r.id + "_" + c + ".pgm"),
                              stft(render_condition(r, c, cfg), cfg.stft));
    }
  }
  return report;
}

}  // namespace gazetse
