#pragma once

#include <cstdint>

#include "artin/word.hpp"

namespace artin {

// splitmix64: tiny, seed-stable across platforms. The report records the
// seed, so check outcomes must not depend on the standard library's
// distribution internals.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d649bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // uniform in [lo, hi]
  long long between(long long lo, long long hi) {
    return lo + static_cast<long long>(
                    below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // uniform signed letters over 1..rank, length uniform in [1, max_len]
  Word random_word(int rank, int max_len) {
    const int len = static_cast<int>(between(1, max_len));
    Word w;
    w.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
      const int index = static_cast<int>(between(1, rank));
      w.push_back(next() & 1 ? index : -index);
    }
    return w;
  }
};

}  // namespace artin
