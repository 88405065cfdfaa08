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

#include "gazetse/scene.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gazetse/error.hpp"
#include "gazetse/rng.hpp"
#include "json.hpp"

namespace gazetse {

using nlohmann::json;

void SceneConfig::validate() const {
  if (frame_width <= 0 || frame_height <= 0) throw Error("frame dimensions must be positive");
  if (fps != kVideoFps) throw Error("scene fps is fixed at 25");
  if (!(duration > 0.0) || !std::isfinite(duration)) throw Error("duration must be positive");
  if (n_speakers < 1) throw Error("n_speakers must be at least 1");
  if (!(face_size_fraction > 0.0)) throw Error("face_size_fraction must be positive");
  if (!(jitter_sigma >= 0.0) || !(box_motion_sigma >= 0.0))
    throw Error("noise sigmas must be non-negative");
  if (initial_target < 0 || initial_target >= n_speakers)
    throw Error("initial_target must index a speaker");
  if (switch_time && !(*switch_time > 0.0 && *switch_time < duration))
    throw Error("switch_time must lie strictly inside the clip");
  if (frame_count() == 0) throw Error("duration is shorter than one video frame");

  const double side = face_side();
  const double spacing = static_cast<double>(frame_width) / n_speakers;
  if (side > spacing)
    throw Error("face boxes of adjacent speakers overlap at rest; reduce face_size_fraction");
  if (side > frame_height) throw Error("face boxes do not fit the frame height");
}

std::optional<std::size_t> SceneConfig::switch_frame() const {
  if (!switch_time) return std::nullopt;
  return window_index(*switch_time, fps);
}

std::vector<BoundingBox> Scene::boxes_at(std::size_t frame) const {
  std::vector<BoundingBox> out;
  out.reserve(tracks.size());
  for (const auto& track : tracks) out.push_back(track.at(frame));
  return out;
}

Scene generate_scene(const SceneConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  const std::size_t n_frames = cfg.frame_count();
  const double side = cfg.face_side();
  const double half = 0.5 * side;
  const double w = cfg.frame_width;
  const double h = cfg.frame_height;

  Scene scene;
  scene.config = cfg;
  scene.tracks.resize(static_cast<std::size_t>(cfg.n_speakers));
  for (int j = 0; j < cfg.n_speakers; ++j) {
    double cx = w * (2.0 * j + 1.0) / (2.0 * cfg.n_speakers);
    double cy = 0.5 * h;
    auto& track = scene.tracks[static_cast<std::size_t>(j)];
    track.reserve(n_frames);
    for (std::size_t f = 0; f < n_frames; ++f) {
      if (cfg.box_motion_sigma > 0.0 && f > 0) {
        cx = std::clamp(cx + rng.normal(0.0, cfg.box_motion_sigma), half, w - half);
        cy = std::clamp(cy + rng.normal(0.0, cfg.box_motion_sigma), half, h - half);
      }
      track.emplace_back(cx - half, cy - half, cx + half, cy + half);
    }
  }

  scene.attended_truth.assign(n_frames, static_cast<std::size_t>(cfg.initial_target));
  if (const auto sf = cfg.switch_frame()) {
    const auto other = static_cast<std::size_t>((cfg.initial_target + 1) % cfg.n_speakers);
    for (std::size_t f = std::min(*sf, n_frames); f < n_frames; ++f)
      scene.attended_truth[f] = other;
  }

  const std::size_t n_gaze = cfg.gaze_sample_count();
  scene.gaze.nominal_rate = kGazeRate;
  scene.gaze.samples.reserve(n_gaze);
  for (std::size_t k = 0; k < n_gaze; ++k) {
    const double t = static_cast<double>(k) / kGazeRate;
    const std::size_t f = std::min(window_index(t, cfg.fps), n_frames - 1);
    const Point2D c = face_center(scene.tracks[scene.attended_truth[f]][f]);
    const double dx = rng.normal();
    const double dy = rng.normal();
    scene.gaze.samples.push_back(
        GazeSample{t, Point2D{c.x + cfg.jitter_sigma * dx, c.y + cfg.jitter_sigma * dy}, true});
  }
  return scene;
}

namespace {

json config_to_json(const SceneConfig& c) {
  json j;
  j["frame_width"] = c.frame_width;
  j["frame_height"] = c.frame_height;
  j["fps"] = c.fps;
  j["duration"] = c.duration;
  j["n_speakers"] = c.n_speakers;
  j["face_size_fraction"] = c.face_size_fraction;
  j["jitter_sigma"] = c.jitter_sigma;
  j["box_motion_sigma"] = c.box_motion_sigma;
  j["switch_time"] = c.switch_time ? json(*c.switch_time) : json(nullptr);
  j["initial_target"] = c.initial_target;
  j["seed"] = c.seed;
  return j;
}

SceneConfig config_from_json(const json& j) {
  SceneConfig c;
  c.frame_width = j.at("frame_width").get<int>();
  c.frame_height = j.at("frame_height").get<int>();
  c.fps = j.at("fps").get<double>();
  c.duration = j.at("duration").get<double>();
  c.n_speakers = j.at("n_speakers").get<int>();
  c.face_size_fraction = j.at("face_size_fraction").get<double>();
  c.jitter_sigma = j.at("jitter_sigma").get<double>();
  c.box_motion_sigma = j.at("box_motion_sigma").get<double>();
  if (!j.at("switch_time").is_null()) c.switch_time = j.at("switch_time").get<double>();
  c.initial_target = j.at("initial_target").get<int>();
  c.seed = j.at("seed").get<std::uint64_t>();
  return c;
}

}  // namespace

std::string scene_to_manifest(const Scene& scene) {
  json j;
  j["format"] = "gazetse.scene/1";
  j["rng"] = Rng::kAlgorithm;
  j["config"] = config_to_json(scene.config);
  json tracks = json::array();
  for (const auto& track : scene.tracks) {
    json boxes = json::array();
    for (const auto& b : track) boxes.push_back({b.x_min(), b.y_min(), b.x_max(), b.y_max()});
    tracks.push_back(std::move(boxes));
  }
  j["tracks"] = std::move(tracks);
  json samples = json::array();
  for (const auto& s : scene.gaze.samples)
    samples.push_back({s.t, s.point.x, s.point.y, s.valid});
  j["gaze"] = {{"nominal_rate", scene.gaze.nominal_rate}, {"samples", std::move(samples)}};
  j["attended_truth"] = scene.attended_truth;
  return j.dump() + "\n";
}

Scene scene_from_manifest(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (j.at("format") != "gazetse.scene/1") throw DataError("unsupported scene format");
    Scene scene;
    scene.config = config_from_json(j.at("config"));
    for (const auto& track : j.at("tracks")) {
      auto& boxes = scene.tracks.emplace_back();
      for (const auto& b : track)
        boxes.emplace_back(b.at(0).get<double>(), b.at(1).get<double>(), b.at(2).get<double>(),
                           b.at(3).get<double>());
    }
    const auto& gaze = j.at("gaze");
    scene.gaze.nominal_rate = gaze.at("nominal_rate").get<double>();
    for (const auto& s : gaze.at("samples"))
      scene.gaze.samples.push_back(GazeSample{
          s.at(0).get<double>(), Point2D{s.at(1).get<double>(), s.at(2).get<double>()},
          s.at(3).get<bool>()});
    scene.attended_truth = j.at("attended_truth").get<std::vector<std::size_t>>();

    const std::size_t n = scene.attended_truth.size();
    for (const auto& track : scene.tracks)
      if (track.size() != n) throw DataError("scene track length differs from frame count");
    for (auto a : scene.attended_truth)
      if (a >= scene.tracks.size()) throw DataError("attended_truth names a missing track");
    scene.gaze.validate();
    return scene;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed scene manifest: ") + e.what());
  } catch (const DataError&) {
    throw;
  } catch (const Error& e) {
    throw DataError(std::string("invalid scene manifest: ") + e.what());
  }
}

void save_scene(const Scene& scene, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << scene_to_manifest(scene);
  if (!out) throw DataError("failed writing " + path.string());
}

Scene load_scene(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return scene_from_manifest(buf.str());
}

}  // namespace gazetse
