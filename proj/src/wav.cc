// seldkit/wav.cc

// Copyright 2026  The seldkit authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "seldkit/wav.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>

#include "seldkit/error.h"

static_assert(std::endian::native == std::endian::little,
              "WAV and tensor I/O assume a little-endian host");

namespace seld {

namespace {

constexpr uint16_t kFormatPcm = 0x0001;
constexpr uint16_t kFormatFloat = 0x0003;
constexpr uint16_t kFormatExtensible = 0xFFFE;

struct FmtChunk {
  uint16_t format = 0;
  uint16_t channels = 0;
  uint32_t sample_rate = 0;
  uint16_t bits_per_sample = 0;
};

uint32_t ReadU32(const uint8_t *p) {
  uint32_t v;
  std::memcpy(&v, p, 4);
  return v;
}

uint16_t ReadU16(const uint8_t *p) {
  uint16_t v;
  std::memcpy(&v, p, 2);
  return v;
}

std::vector<uint8_t> ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) ThrowIo("cannot open " + path.string());
  in.seekg(0, std::ios::end);
  std::streamoff size = in.tellg();
  in.seekg(0);
  std::vector<uint8_t> data(static_cast<size_t>(size));
  if (size > 0) in.read(reinterpret_cast<char *>(data.data()), size);
  if (!in) ThrowIo("failed reading " + path.string());
  return data;
}

}  // namespace

AudioClip AudioClip::Silence(int sample_rate, size_t num_channels,
                             size_t num_samples) {
  AudioClip clip;
  clip.sample_rate = sample_rate;
  clip.channels.assign(num_channels, std::vector<float>(num_samples, 0.0f));
  return clip;
}

AudioClip ReadWav(const std::filesystem::path &path) {
  std::vector<uint8_t> data = ReadFile(path);
  if (data.size() < 12 || std::memcmp(data.data(), "RIFF", 4) != 0 ||
      std::memcmp(data.data() + 8, "WAVE", 4) != 0) {
    ThrowIo(path.string() + ": not a RIFF/WAVE file");
  }

  FmtChunk fmt;
  bool have_fmt = false;
  const uint8_t *payload = nullptr;
  size_t payload_size = 0;

  size_t pos = 12;
  while (pos + 8 <= data.size()) {
    char id[5] = {0};
    std::memcpy(id, data.data() + pos, 4);
    uint32_t chunk_size = ReadU32(data.data() + pos + 4);
    pos += 8;
    if (pos + chunk_size > data.size()) {
      // data chunks with an over-long declared size are a common defect in
      // truncated files
      ThrowIo(path.string() + ": truncated chunk '" + id + "'");
    }
    if (std::strcmp(id, "fmt ") == 0) {
      if (chunk_size < 16) ThrowIo(path.string() + ": short fmt chunk");
      fmt.format = ReadU16(data.data() + pos);
      fmt.channels = ReadU16(data.data() + pos + 2);
      fmt.sample_rate = ReadU32(data.data() + pos + 4);
      fmt.bits_per_sample = ReadU16(data.data() + pos + 14);
      if (fmt.format == kFormatExtensible) {
        if (chunk_size < 40) ThrowIo(path.string() + ": short extensible fmt chunk");
        // First two bytes of the SubFormat GUID carry the real format code.
        fmt.format = ReadU16(data.data() + pos + 24);
      }
      have_fmt = true;
    } else if (std::strcmp(id, "data") == 0) {
      payload = data.data() + pos;
      payload_size = chunk_size;
    }
    pos += chunk_size + (chunk_size & 1);  // chunks are word-aligned
  }

  if (!have_fmt) ThrowIo(path.string() + ": missing fmt chunk");
  if (payload == nullptr) ThrowIo(path.string() + ": missing data chunk");
  if (fmt.channels == 0) ThrowIo(path.string() + ": zero channels");

  size_t bytes_per_sample;
  if (fmt.format == kFormatPcm && fmt.bits_per_sample == 16) {
    bytes_per_sample = 2;
  } else if (fmt.format == kFormatPcm && fmt.bits_per_sample == 24) {
    bytes_per_sample = 3;
  } else if (fmt.format == kFormatFloat && fmt.bits_per_sample == 32) {
    bytes_per_sample = 4;
  } else {
    ThrowIo(path.string() + ": unsupported codec (format " +
            std::to_string(fmt.format) + ", " +
            std::to_string(fmt.bits_per_sample) + " bit)");
  }

  size_t frame_bytes = bytes_per_sample * fmt.channels;
  if (payload_size % frame_bytes != 0) {
    ThrowIo(path.string() + ": data chunk is not a whole number of frames");
  }
  size_t num_frames = payload_size / frame_bytes;

  AudioClip clip;
  clip.sample_rate = static_cast<int>(fmt.sample_rate);
  clip.channels.assign(fmt.channels, std::vector<float>(num_frames));
  const uint8_t *p = payload;
  for (size_t frame = 0; frame < num_frames; ++frame) {
    for (size_t ch = 0; ch < fmt.channels; ++ch) {
      float value;
      if (bytes_per_sample == 2) {
        int16_t s;
        std::memcpy(&s, p, 2);
        value = static_cast<float>(s) / 32768.0f;
      } else if (bytes_per_sample == 3) {
        uint32_t u = (uint32_t{p[0]} << 8) | (uint32_t{p[1]} << 16) |
                     (uint32_t{p[2]} << 24);
        int32_t s = static_cast<int32_t>(u) >> 8;  // sign-extended 24 bit
        value = static_cast<float>(s) / 8388608.0f;
      } else {
        std::memcpy(&value, p, 4);
      }
      if (!std::isfinite(value)) {
        ThrowIo(path.string() + ": non-finite sample value");
      }
      clip.channels[ch][frame] = value;
      p += bytes_per_sample;
    }
  }
  return clip;
}

void WriteWav(const AudioClip &clip, const std::filesystem::path &path,
              WavEncoding encoding) {
  for (const auto &ch : clip.channels) {
    if (ch.size() != clip.num_samples()) {
      ThrowValidation("channels differ in length");
    }
  }
  uint16_t format;
  uint16_t bits;
  switch (encoding) {
    case WavEncoding::kPcm16: format = kFormatPcm; bits = 16; break;
    case WavEncoding::kPcm24: format = kFormatPcm; bits = 24; break;
    case WavEncoding::kFloat32: format = kFormatFloat; bits = 32; break;
    default: ThrowConfig("unknown WAV encoding");
  }
  const uint16_t channels = static_cast<uint16_t>(clip.num_channels());
  if (channels == 0) ThrowValidation("cannot write a clip with no channels");
  const size_t num_frames = clip.num_samples();
  const size_t bytes_per_sample = bits / 8;
  const size_t data_bytes = num_frames * channels * bytes_per_sample;

  std::vector<uint8_t> out;
  out.reserve(44 + data_bytes);
  auto push_u32 = [&out](uint32_t v) {
    out.insert(out.end(), reinterpret_cast<uint8_t *>(&v),
               reinterpret_cast<uint8_t *>(&v) + 4);
  };
  auto push_u16 = [&out](uint16_t v) {
    out.insert(out.end(), reinterpret_cast<uint8_t *>(&v),
               reinterpret_cast<uint8_t *>(&v) + 2);
  };

  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  push_u32(static_cast<uint32_t>(36 + data_bytes));
  out.insert(out.end(), {'W', 'A', 'V', 'E'});
  out.insert(out.end(), {'f', 'm', 't', ' '});
  push_u32(16);
  push_u16(format);
  push_u16(channels);
  push_u32(static_cast<uint32_t>(clip.sample_rate));
  push_u32(static_cast<uint32_t>(clip.sample_rate * channels * bytes_per_sample));
  push_u16(static_cast<uint16_t>(channels * bytes_per_sample));
  push_u16(bits);
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  push_u32(static_cast<uint32_t>(data_bytes));

  for (size_t frame = 0; frame < num_frames; ++frame) {
    for (size_t ch = 0; ch < channels; ++ch) {
      float x = clip.channels[ch][frame];
      if (encoding == WavEncoding::kFloat32) {
        uint32_t bits32;
        std::memcpy(&bits32, &x, 4);
        push_u32(bits32);
      } else if (encoding == WavEncoding::kPcm16) {
        long q = std::lrint(static_cast<double>(x) * 32768.0);
        q = std::clamp(q, -32768L, 32767L);
        push_u16(static_cast<uint16_t>(static_cast<int16_t>(q)));
      } else {
        long q = std::lrint(static_cast<double>(x) * 8388608.0);
        q = std::clamp(q, -8388608L, 8388607L);
        uint32_t u = static_cast<uint32_t>(static_cast<int32_t>(q));
        out.push_back(static_cast<uint8_t>(u & 0xFF));
        out.push_back(static_cast<uint8_t>((u >> 8) & 0xFF));
        out.push_back(static_cast<uint8_t>((u >> 16) & 0xFF));
      }
    }
  }

  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) ThrowIo("cannot open " + path.string() + " for writing");
  os.write(reinterpret_cast<const char *>(out.data()),
           static_cast<std::streamsize>(out.size()));
  if (!os) ThrowIo("failed writing " + path.string());
}

}  // namespace seld
