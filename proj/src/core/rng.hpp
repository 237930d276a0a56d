#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace symcone {

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// One user-facing seed fans out into named streams, one per (suite, trial).
// Trial streams are independent of evaluation order, so results do not
// depend on scheduling.
inline std::uint64_t substream_seed(std::uint64_t seed, std::string_view name,
                                    std::uint64_t index = 0) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return mix64(seed ^ mix64(h) ^ mix64(index + 0x632be59bd9b4e019ull));
}

inline std::mt19937_64 substream(std::uint64_t seed, std::string_view name,
                                 std::uint64_t index = 0) {
  return std::mt19937_64(substream_seed(seed, name, index));
}

}  // namespace symcone
