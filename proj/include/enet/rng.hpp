#pragma once

#include <cstdint>

namespace enet {

// splitmix64 (Steele, Lea, Flood 2014). This is the PRNG behind fold
// assignment: it is fully specified by its seed, so fold membership is
// reproducible bit-for-bit across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Draw in [0, m). Plain modulo: the bias is below 2^-53 for any m that
  // fits an observation count, and the scheme is trivially portable.
  std::uint64_t bounded(std::uint64_t m) { return next() % m; }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace enet
