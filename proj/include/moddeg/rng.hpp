#pragma once

#include <cstdint>
#include <random>

namespace moddeg {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Uniform draw in [0, k); unbiased rejection sampling so that results do
/// not depend on the standard library's distribution implementation.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t k) {
  if (k <= 1) return 0;
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % k;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % k;
}

/// Uniform integer in [lo, hi].
inline long long draw_range(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(
                  draw_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace moddeg
