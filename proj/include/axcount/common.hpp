#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace axcount {

[[noreturn]] inline void fail(const std::string& msg) {
  throw std::runtime_error(msg);
}

inline int popcount24(uint32_t w) { return std::popcount(w & 0xFFFFFFu); }

inline int parity(uint32_t w) { return std::popcount(w) & 1; }

// Default seed for every randomized computation in the library.  All
// Monte Carlo results are reproducible functions of (generators, seed).
inline constexpr uint64_t kDefaultSeed = 1;

// SplitMix64: the output is a hash of a counter, so independent streams
// can be derived from (seed, stream-id) pairs without coordination.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t s) : state(s) {}
  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

inline uint64_t mix_stream(uint64_t seed, uint64_t a, uint64_t b = 0, uint64_t c = 0) {
  SplitMix64 h(seed ^ (a * 0xD1B54A32D192ED03ull) ^ (b * 0x8CB92BA72F3D8DD7ull) ^
               (c * 0xE220A8397B1DCDAFull));
  return h.next();
}

// Data directory resolution: $AXCOUNT_DATA, then ./data, then the
// location baked in at configure time.
inline std::string data_dir() {
  if (const char* env = std::getenv("AXCOUNT_DATA")) return env;
  if (std::filesystem::exists("data/golay_basis.txt")) return "data";
#ifdef AXCOUNT_DATA_DIR
  return AXCOUNT_DATA_DIR;
#else
  return "data";
#endif
}

inline std::string data_path(const std::string& name) {
  return data_dir() + "/" + name;
}

inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

// Strips a trailing "# ..." comment and surrounding whitespace.
inline std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  std::string s = pos == std::string::npos ? line : line.substr(0, pos);
  auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream iss(s);
  std::vector<std::string> out;
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

}  // namespace axcount
