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

#include "gazetse/attention.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "gazetse/error.hpp"

namespace gazetse {

void GazeTrace::validate() const {
  if (!(nominal_rate > 0.0)) throw Error("gaze trace rate must be positive");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double t = samples[i].t;
    if (!std::isfinite(t) || t < 0.0) throw Error("gaze timestamps must be finite and non-negative");
    if (i > 0 && !(t > samples[i - 1].t))
      throw Error("gaze timestamps must be strictly increasing");
  }
}

namespace {

double median(std::vector<double>& v) {
  const std::size_t n = v.size();
  std::sort(v.begin(), v.end());
  if (n % 2 == 1) return v[n / 2];
  return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

std::vector<std::optional<Point2D>> resample_gaze(const GazeTrace& trace, double fps,
                                                  std::size_t n_frames) {
  if (!(fps > 0.0)) throw Error("fps must be positive");
  trace.validate();

  std::vector<std::optional<Point2D>> out(n_frames);
  std::vector<double> xs, ys;
  std::size_t next = 0;
  const auto& samples = trace.samples;
  for (std::size_t f = 0; f < n_frames; ++f) {
    xs.clear();
    ys.clear();
    while (next < samples.size() && window_index(samples[next].t, fps) <= f) {
      if (window_index(samples[next].t, fps) == f && samples[next].valid) {
        xs.push_back(samples[next].point.x);
        ys.push_back(samples[next].point.y);
      }
      ++next;
    }
    if (!xs.empty()) {
      out[f] = Point2D{median(xs), median(ys)};
    } else if (f > 0) {
      out[f] = out[f - 1];
    }
  }
  return out;
}

SelectionTrace track_attention(const Scene& scene, const AttentionConfig& cfg) {
  cfg.validate();
  const std::size_t n_frames = scene.frame_count();
  const auto gaze = resample_gaze(scene.gaze, scene.config.fps, n_frames);

  SelectionTrace trace;
  trace.fps = scene.config.fps;
  trace.per_frame.resize(n_frames);
  std::vector<BoundingBox> boxes;
  for (std::size_t f = 0; f < n_frames; ++f) {
    std::optional<std::size_t> pick;
    if (gaze[f]) {
      boxes = scene.boxes_at(f);
      pick = select_target(*gaze[f], boxes, cfg);
    }
    if (!pick && f > 0) pick = trace.per_frame[f - 1];
    trace.per_frame[f] = pick;
  }
  return trace;
}

SelectionTrace debounce(const SelectionTrace& trace, std::size_t k) {
  if (k < 1) throw Error("debounce length must be at least 1");
  SelectionTrace out;
  out.fps = trace.fps;
  out.per_frame.reserve(trace.size());
  if (trace.per_frame.empty()) return out;

  std::optional<std::size_t> committed = trace.per_frame.front();
  std::optional<std::size_t> candidate;
  std::size_t run = 0;
  for (const auto& x : trace.per_frame) {
    if (x == committed) {
      run = 0;
    } else if (!committed) {
      committed = x;
      run = 0;
    } else {
      if (run > 0 && x == candidate) {
        ++run;
      } else {
        candidate = x;
        run = 1;
      }
      if (run >= k) {
        committed = x;
        run = 0;
      }
    }
    out.per_frame.push_back(committed);
  }
  return out;
}

std::string selection_to_text(const SelectionTrace& trace) {
  std::ostringstream os;
  for (std::size_t f = 0; f < trace.size(); ++f) {
    os << f << ',';
    if (trace.per_frame[f]) {
      os << *trace.per_frame[f];
    } else {
      os << -1;
    }
    os << '\n';
  }
  return os.str();
}

SelectionTrace selection_from_text(std::string_view text, double fps) {
  SelectionTrace trace;
  trace.fps = fps;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    const auto comma = line.find(',');
    long long frame = -1, id = -2;
    const auto a = line.substr(0, comma);
    const auto b = comma == std::string_view::npos ? std::string_view{} : line.substr(comma + 1);
    const bool ok =
        comma != std::string_view::npos &&
        std::from_chars(a.data(), a.data() + a.size(), frame).ec == std::errc{} &&
        std::from_chars(b.data(), b.data() + b.size(), id).ec == std::errc{};
    if (!ok || frame != static_cast<long long>(line_no) || id < -1)
      throw DataError("malformed selection row " + std::to_string(line_no + 1));
    trace.per_frame.push_back(id < 0 ? std::nullopt
                                     : std::optional<std::size_t>(static_cast<std::size_t>(id)));
    ++line_no;
  }
  return trace;
}

}  // namespace gazetse
