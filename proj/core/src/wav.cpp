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

#include "gazetse/wav.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <vector>

#include "gazetse/error.hpp"

namespace gazetse {

namespace {

std::uint32_t le32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}
std::uint16_t le16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}
void put32(std::vector<unsigned char>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xff));
}
void put16(std::vector<unsigned char>& out, std::uint16_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
}
void put_tag(std::vector<unsigned char>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

std::int16_t to_pcm16(double v) {
  double s = std::round(v * 32768.0);
  if (s > 32767.0) s = 32767.0;
  if (s < -32767.0) s = -32767.0;
  if (std::isnan(s)) s = 0.0;
  return static_cast<std::int16_t>(s);
}

}  // namespace

Waveform read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  const std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                         std::istreambuf_iterator<char>());
  const auto fail = [&](const char* why) {
    throw DataError(path.string() + ": " + why);
  };
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    fail("not a RIFF/WAVE file");

  bool have_fmt = false;
  int rate = 0;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* chunk = bytes.data() + pos;
    const std::size_t size = le32(chunk + 4);
    const std::size_t body = pos + 8;
    if (body + size > bytes.size()) fail("truncated chunk");
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (size < 16) fail("short fmt chunk");
      const auto format = le16(bytes.data() + body);
      const auto channels = le16(bytes.data() + body + 2);
      rate = static_cast<int>(le32(bytes.data() + body + 4));
      const auto bits = le16(bytes.data() + body + 14);
      if (format != 1) fail("only PCM is supported");
      if (channels != 1) fail("only mono is supported");
      if (bits != 16) fail("only 16-bit samples are supported");
      if (rate <= 0) fail("invalid sample rate");
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      if (!have_fmt) fail("data chunk precedes fmt chunk");
      Waveform wave;
      wave.rate = rate;
      wave.samples.resize(size / 2);
      for (std::size_t i = 0; i < wave.samples.size(); ++i) {
        const auto raw = static_cast<std::int16_t>(le16(bytes.data() + body + 2 * i));
        wave.samples[i] = static_cast<double>(raw) / 32768.0;
      }
      return wave;
    }
    pos = body + size + (size & 1);
  }
  fail("missing data chunk");
  return {};
}

void write_wav(const std::filesystem::path& path, const Waveform& wave) {
  const std::size_t data_bytes = 2 * wave.size();
  if (data_bytes > 0xffffffffu - 36) throw DataError("waveform too long for WAV");
  std::vector<unsigned char> out;
  out.reserve(44 + data_bytes);
  put_tag(out, "RIFF");
  put32(out, static_cast<std::uint32_t>(36 + data_bytes));
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put32(out, 16);
  put16(out, 1);  // PCM
  put16(out, 1);  // mono
  put32(out, static_cast<std::uint32_t>(wave.rate));
  put32(out, static_cast<std::uint32_t>(wave.rate) * 2);
  put16(out, 2);
  put16(out, 16);
  put_tag(out, "data");
  put32(out, static_cast<std::uint32_t>(data_bytes));
  for (double v : wave.samples) put16(out, static_cast<std::uint16_t>(to_pcm16(v)));

  std::ofstream file(path, std::ios::binary);
  if (!file) throw DataError("cannot write " + path.string());
  file.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
  if (!file) throw DataError("failed writing " + path.string());
}

Waveform quantize_pcm16(const Waveform& wave) {
  Waveform out = wave;
  for (double& v : out.samples) v = static_cast<double>(to_pcm16(v)) / 32768.0;
  return out;
}

}  // namespace gazetse
