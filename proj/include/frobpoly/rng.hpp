#pragma once
// The deterministic pseudo-random stream used everywhere a seed appears:
// a 64-bit linear congruential generator with Knuth's MMIX multiplier.
// Keeping it in one place guarantees that samplers, verification suites and
// tests all read the same stream for the same seed.

#include <cstdint>

namespace frobpoly {

struct Lcg {
  std::uint64_t state;
  std::uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state;
  }
};

}  // namespace frobpoly
