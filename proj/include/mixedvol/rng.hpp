#pragma once

#include <cstdint>

namespace mixedvol {

// splitmix64: tiny deterministic generator, stable across platforms.
// Used everywhere a seed appears in a public contract so that reports
// are reproducible bit for bit.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n); n > 0.  Modulo bias is irrelevant for the small n
  // used here.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  long range(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

// Derives an independent stream, used for the single reseed retries.
inline std::uint64_t reseed(std::uint64_t seed) {
  SplitMix64 g(seed ^ 0xa5a5a5a5deadbeefULL);
  return g.next();
}

}  // namespace mixedvol
