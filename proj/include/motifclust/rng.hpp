#pragma once

#include <cstdint>
#include <random>

namespace motifclust {

// mt19937_64 with explicit output mapping. std::uniform_int_distribution is
// implementation-defined; mapping the raw stream ourselves keeps results
// identical across standard libraries for a given seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next() { return gen_(); }

  // Unbiased uniform draw from [0, k), k >= 1 (Lemire's method).
  uint64_t below(uint64_t k) {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * k;
    auto lo = static_cast<uint64_t>(m);
    if (lo < k) {
      uint64_t t = (0 - k) % k;
      while (lo < t) {
        m = static_cast<unsigned __int128>(next()) * k;
        lo = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

  int below_int(int k) { return static_cast<int>(below(static_cast<uint64_t>(k))); }

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform subset of {0, ..., bits-1} as a bitmask; includes the empty set.
  uint64_t subset_mask(int bits) {
    uint64_t r = next();
    return bits >= 64 ? r : r & ((uint64_t{1} << bits) - 1);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace motifclust
