#include "framemult/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "framemult/errors.hpp"

namespace framemult {

namespace {

constexpr double kScale = 32768.0;

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) |
         static_cast<std::uint32_t>(p[1]) << 8 |
         static_cast<std::uint32_t>(p[2]) << 16 |
         static_cast<std::uint32_t>(p[3]) << 24;
}

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(static_cast<std::uint32_t>(p[0]) |
                                    static_cast<std::uint32_t>(p[1]) << 8);
}

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 16) & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 24) & 0xff));
}

void put_u16(std::vector<unsigned char>& out, std::uint16_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
}

[[noreturn]] void fail_at(std::size_t offset, const std::string& what) {
  throw IoError("wav parse error at byte " + std::to_string(offset) + ": " +
                what);
}

}  // namespace

Signal read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::vector<unsigned char> data((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());

  if (data.size() < 12) fail_at(data.size(), "truncated RIFF header");
  if (std::memcmp(data.data(), "RIFF", 4) != 0) fail_at(0, "missing RIFF tag");
  if (std::memcmp(data.data() + 8, "WAVE", 4) != 0) {
    fail_at(8, "missing WAVE tag");
  }

  bool have_fmt = false;
  Signal signal;
  std::size_t pos = 12;
  while (pos + 8 <= data.size()) {
    char tag[5] = {0};
    std::memcpy(tag, data.data() + pos, 4);
    const std::uint32_t chunk_size = read_u32(data.data() + pos + 4);
    const std::size_t body = pos + 8;
    if (body + chunk_size > data.size()) {
      fail_at(body, std::string("chunk '") + tag + "' exceeds file size");
    }
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      if (chunk_size < 16) fail_at(body, "fmt chunk too short");
      const std::uint16_t format = read_u16(data.data() + body);
      const std::uint16_t channels = read_u16(data.data() + body + 2);
      const std::uint32_t rate = read_u32(data.data() + body + 4);
      const std::uint16_t bits = read_u16(data.data() + body + 14);
      if (format != 1) throw IoError("unsupported wav encoding (PCM only)");
      if (channels != 1) {
        throw IoError("unsupported channel count " + std::to_string(channels) +
                      " (mono only)");
      }
      if (bits != 16) {
        throw IoError("unsupported sample width " + std::to_string(bits) +
                      " (16-bit only)");
      }
      signal.sample_rate = static_cast<int>(rate);
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      if (!have_fmt) fail_at(pos, "data chunk before fmt chunk");
      const std::size_t count = chunk_size / 2;
      signal.samples.resize(count);
      for (std::size_t i = 0; i < count; ++i) {
        const std::uint16_t raw = read_u16(data.data() + body + 2 * i);
        const std::int16_t s = static_cast<std::int16_t>(raw);
        signal.samples[i] = static_cast<double>(s) / kScale;
      }
      return signal;
    }
    pos = body + chunk_size + (chunk_size % 2);  // chunks are word aligned
  }
  fail_at(pos, have_fmt ? "missing data chunk" : "missing fmt chunk");
}

void write_wav(const std::string& path, const Signal& signal) {
  if (signal.samples.empty()) throw IoError("refusing to write empty signal");
  if (signal.sample_rate <= 0) throw IoError("sample rate must be positive");

  const std::uint32_t n = static_cast<std::uint32_t>(signal.samples.size());
  const std::uint32_t data_bytes = 2 * n;
  std::vector<unsigned char> out;
  out.reserve(44 + data_bytes);

  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  put_u32(out, 36 + data_bytes);
  out.insert(out.end(), {'W', 'A', 'V', 'E'});
  out.insert(out.end(), {'f', 'm', 't', ' '});
  put_u32(out, 16);
  put_u16(out, 1);  // PCM
  put_u16(out, 1);  // mono
  put_u32(out, static_cast<std::uint32_t>(signal.sample_rate));
  put_u32(out, static_cast<std::uint32_t>(signal.sample_rate) * 2);
  put_u16(out, 2);   // block align
  put_u16(out, 16);  // bits
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  put_u32(out, data_bytes);

  for (const double x : signal.samples) {
    double v = std::llround(x * kScale);
    v = std::clamp(v, -32768.0, 32767.0);
    put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(v)));
  }

  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file.write(reinterpret_cast<const char*>(out.data()),
             static_cast<std::streamsize>(out.size()));
  if (!file) throw IoError("wav write failed");
}

}  // namespace framemult
