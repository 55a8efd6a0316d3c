#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <random>

namespace altwidth {

// Unbiased draw from [0, bound) on top of mt19937_64. std::uniform_int_distribution
// is implementation-defined, so seeded outputs would not be byte-stable across
// standard libraries; this rejection loop is.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  assert(bound > 0);
  constexpr std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t overhang = (top % bound + 1) % bound;  // 2^64 mod bound
  const std::uint64_t cap = top - overhang;
  for (;;) {
    std::uint64_t x = rng();
    if (x <= cap) return x % bound;
  }
}

// Inclusive range draw.
inline std::uint64_t draw_between(std::mt19937_64& rng, std::uint64_t lo,
                                  std::uint64_t hi) {
  assert(lo <= hi);
  return lo + draw_below(rng, hi - lo + 1);
}

}  // namespace altwidth
