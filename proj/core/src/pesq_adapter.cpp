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

#include <array>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <random>
#include <regex>
#include <string>

#include "gazetse/error.hpp"
#include "gazetse/metrics.hpp"
#include "gazetse/wav.hpp"

namespace gazetse {

namespace {

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    std::random_device rd;
    const auto base = std::filesystem::temp_directory_path();
    for (int attempt = 0; attempt < 16; ++attempt) {
      path = base / ("gazetse-pesq-" + std::to_string(rd()));
      if (std::filesystem::create_directory(path)) return;
    }
    throw DataError("cannot create a temporary directory for PESQ");
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
};

}  // namespace

double PesqAdapter::score(const Waveform& reference, const Waveform& estimate) const {
  if (command.empty()) throw Error("PESQ adapter has no command");
  TempDir dir;
  const auto ref_path = dir.path / "reference.wav";
  const auto est_path = dir.path / "estimate.wav";
  write_wav(ref_path, reference);
  write_wav(est_path, estimate);

  const std::string cmd =
      command + " " + shell_quote(ref_path.string()) + " " + shell_quote(est_path.string());
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) throw DataError("cannot run PESQ command: " + command);
  std::string output;
  std::array<char, 256> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe.get())) output += buf.data();
  const int status = pclose(pipe.release());
  if (status != 0) throw DataError("PESQ command exited with status " + std::to_string(status));

  static const std::regex number(R"([-+]?(\d+\.?\d*|\.\d+)([eE][-+]?\d+)?)");
  std::smatch m;
  if (!std::regex_search(output, m, number)) throw DataError("PESQ command printed no number");
  return std::stod(m.str());
}

}  // namespace gazetse
