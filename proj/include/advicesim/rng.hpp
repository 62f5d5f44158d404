#pragma once

#include <cstdint>

namespace advicesim::rng {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// 64-bit finalizer from SplitMix64.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Derives an independent stream seed from (base, index). Used for
// per-trial seeds so parallel trials are order-independent.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return mix64(base ^ mix64(index + kGolden));
}

// SplitMix64: counter-based and splittable. Draw i from seed s is
// mix64(s + (i+1)*kGolden), so a stream is a pure function of (seed, i).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return mix64(state_ += kGolden); }

  // uniform in [0, 1) with 53-bit resolution
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform in [0, bound), unbiased via rejection
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace advicesim::rng
