#pragma once

#include <cstdint>

namespace rotor {

/// splitmix64 finalizer.
constexpr std::uint64_t avalanche(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

/// Stateless keyed hash of (seed, domain tag, coordinates, counter).
constexpr std::uint64_t mix_words(std::uint64_t seed, std::uint64_t tag, std::int64_t x, std::int64_t y,
                                  std::uint64_t counter = 0) {
  std::uint64_t h = avalanche(seed ^ 0x9E3779B97F4A7C15ULL);
  h = avalanche(h ^ tag);
  h = avalanche(h ^ static_cast<std::uint64_t>(x));
  h = avalanche(h ^ (static_cast<std::uint64_t>(y) * 0xD6E8FEB86659FD93ULL));
  h = avalanche(h ^ counter);
  return h;
}

/// Unbiased draw from {0, ..., bound-1}; redraws with a counter until the
/// value falls outside the 2^64 mod bound short tail.
constexpr std::uint32_t uniform_below(std::uint64_t seed, std::uint64_t tag, std::int64_t x, std::int64_t y,
                                      std::uint32_t bound) {
  const std::uint64_t reject_below = (0 - static_cast<std::uint64_t>(bound)) % bound;
  for (std::uint64_t counter = 0;; ++counter) {
    const std::uint64_t h = mix_words(seed, tag, x, y, counter);
    if (h >= reject_below) return static_cast<std::uint32_t>(h % bound);
  }
}

namespace tags {
inline constexpr std::uint64_t kUniformRotor = 0x726f746f722d756eULL;
inline constexpr std::uint64_t kPercolation = 0x7065726330626f6eULL;
inline constexpr std::uint64_t kMirrorStart = 0x6d6972726f722d30ULL;
}  // namespace tags

}  // namespace rotor
