#pragma once

#include <string>
#include <vector>

namespace framemult {

struct Signal {
  std::vector<double> samples;  // in [-1, 1)
  int sample_rate = 0;
};

/// Mono 16-bit PCM RIFF/WAVE reader. Samples scale to [-1, 1) by 1/32768.
/// Anything else (stereo, other encodings, truncated chunks) raises IoError
/// with the failing byte offset where applicable.
Signal read_wav(const std::string& path);

/// Bit-exact inverse of read_wav for in-range samples; out-of-range values
/// clamp to the representable range.
void write_wav(const std::string& path, const Signal& signal);

}  // namespace framemult
