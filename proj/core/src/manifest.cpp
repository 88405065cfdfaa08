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

#include <charconv>
#include <fstream>
#include <sstream>

#include "gazetse/dataset.hpp"
#include "gazetse/error.hpp"
#include "gazetse/rng.hpp"
#include "json.hpp"

namespace gazetse {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

std::string relative_to(const fs::path& p, const fs::path& base) {
  const fs::path a = fs::absolute(p).lexically_normal();
  const fs::path b = fs::absolute(base).lexically_normal();
  const fs::path r = a.lexically_relative(b);
  return (r.empty() ? a : r).generic_string();
}

fs::path resolve(const std::string& p, const fs::path& base) {
  const fs::path path(p);
  return path.is_absolute() ? path : (base / path).lexically_normal();
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.emplace_back(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  for (auto& c : cells) {
    while (!c.empty() && (c.back() == ' ' || c.back() == '\r')) c.pop_back();
    while (!c.empty() && c.front() == ' ') c.erase(c.begin());
  }
  return cells;
}

ordered_json utterance_json(const UtteranceRecord& u, const fs::path& base) {
  ordered_json j;
  j["id"] = u.id;
  j["speaker_id"] = u.speaker_id;
  j["audio_path"] = relative_to(u.audio_path, base);
  j["duration"] = u.duration;
  return j;
}

UtteranceRecord utterance_from_json(const ordered_json& j, const fs::path& base) {
  UtteranceRecord u;
  u.id = j.at("id").get<std::string>();
  u.speaker_id = j.at("speaker_id").get<std::string>();
  u.audio_path = resolve(j.at("audio_path").get<std::string>(), base);
  u.duration = j.at("duration").get<double>();
  return u;
}

}  // namespace

std::vector<UtteranceRecord> read_utterance_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path.string());
  const fs::path base = path.parent_path();
  std::string line;
  if (!std::getline(in, line)) throw DataError(path.string() + ": empty file");
  const auto header = split_csv_line(line);
  if (header != std::vector<std::string>{"id", "speaker_id", "audio_path", "duration"})
    throw DataError(path.string() + ": header must be id,speaker_id,audio_path,duration");

  std::vector<UtteranceRecord> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto cells = split_csv_line(line);
    const auto where = path.string() + ":" + std::to_string(line_no);
    if (cells.size() != 4) throw DataError(where + ": expected 4 fields");
    UtteranceRecord u;
    u.id = cells[0];
    u.speaker_id = cells[1];
    u.audio_path = resolve(cells[2], base);
    const auto& d = cells[3];
    const auto res = std::from_chars(d.data(), d.data() + d.size(), u.duration);
    if (res.ec != std::errc{} || res.ptr != d.data() + d.size() || !(u.duration > 0.0))
      throw DataError(where + ": duration must be a positive number");
    if (u.id.empty() || u.speaker_id.empty()) throw DataError(where + ": empty id or speaker");
    for (const auto& prev : out)
      if (prev.id == u.id) throw DataError(where + ": duplicate id " + u.id);
    out.push_back(std::move(u));
  }
  return out;
}

void write_utterance_csv(const fs::path& path, std::span<const UtteranceRecord> records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  const fs::path base = path.parent_path();
  out << "id,speaker_id,audio_path,duration\n";
  for (const auto& u : records) {
    std::ostringstream dur;
    dur.precision(17);
    dur << u.duration;
    out << u.id << ',' << u.speaker_id << ',' << relative_to(u.audio_path, base) << ','
        << dur.str() << '\n';
  }
  if (!out) throw DataError("failed writing " + path.string());
}

void write_manifest(const fs::path& path, std::span<const MixtureRecord> records,
                    const BuildOptions& options) {
  const fs::path base = path.parent_path();
  ordered_json j;
  j["format"] = "gazetse.dataset/1";
  j["rng"] = Rng::kAlgorithm;
  j["options"] = {{"seed", options.seed},
                  {"with_scenes", options.with_scenes},
                  {"switch_fraction", options.switch_fraction},
                  {"gap_seconds", options.gap_seconds}};
  ordered_json list = ordered_json::array();
  for (const auto& r : records) {
    ordered_json e;
    e["id"] = r.id;
    e["target"] = utterance_json(r.target, base);
    e["interferer"] = utterance_json(r.interferer, base);
    e["mixture_path"] = relative_to(r.mixture_path, base);
    e["reference_path"] = relative_to(r.reference_path, base);
    ordered_json sources = ordered_json::array();
    for (const auto& s : r.source_paths) sources.push_back(relative_to(s, base));
    e["source_paths"] = std::move(sources);
    e["scene_ref"] = r.scene_ref ? ordered_json(relative_to(*r.scene_ref, base)) : ordered_json();
    if (r.switch_info) {
      e["switch"] = {{"gap_seconds", r.switch_info->gap_seconds},
                     {"switch_frame", r.switch_info->switch_frame}};
    } else {
      e["switch"] = nullptr;
    }
    list.push_back(std::move(e));
  }
  j["records"] = std::move(list);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << j.dump(1) << '\n';
  if (!out) throw DataError("failed writing " + path.string());
}

std::vector<MixtureRecord> read_manifest(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  const fs::path base = path.parent_path();
  try {
    const ordered_json j = ordered_json::parse(in);
    std::vector<MixtureRecord> out;
    for (const auto& e : j.at("records")) {
      MixtureRecord r;
      r.id = e.at("id").get<std::string>();
      r.target = utterance_from_json(e.at("target"), base);
      r.interferer = utterance_from_json(e.at("interferer"), base);
      r.mixture_path = resolve(e.at("mixture_path").get<std::string>(), base);
      r.reference_path = resolve(e.at("reference_path").get<std::string>(), base);
      for (const auto& s : e.at("source_paths"))
        r.source_paths.push_back(resolve(s.get<std::string>(), base));
      if (e.contains("scene_ref") && !e.at("scene_ref").is_null())
        r.scene_ref = resolve(e.at("scene_ref").get<std::string>(), base);
      if (e.contains("switch") && !e.at("switch").is_null())
        r.switch_info = SwitchInfo{e.at("switch").at("gap_seconds").get<double>(),
                                   e.at("switch").at("switch_frame").get<std::size_t>()};
      if (r.target.speaker_id == r.interferer.speaker_id)
        throw DataError("record " + r.id + " pairs a speaker with themself");
      out.push_back(std::move(r));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(path.string() + ": malformed manifest: " + e.what());
  }
}

}  // namespace gazetse
