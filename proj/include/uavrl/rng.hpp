#pragma once

#include <cstdint>

namespace uavrl {

/// PCG-XSH-RR 64/32 ("pcg32", O'Neill's reference variant).
///
/// The generator is part of the artifact's reproducibility contract: every
/// seeded run here must be bit-reproducible from (seed, stream) alone, so we
/// fix a small, publicly specified algorithm instead of std:: distributions,
/// whose outputs differ between standard libraries. Bounded draws use the
/// reference rejection scheme (pcg32_boundedrand_r) and unit doubles use the
/// top 32 bits scaled by 2^-32.
class Pcg32 {
 public:
  explicit Pcg32(std::uint64_t seed, std::uint64_t stream = 0) {
    state_ = 0;
    inc_ = (stream << 1u) | 1u;
    next_u32();
    state_ += seed;
    next_u32();
  }

  std::uint32_t next_u32() {
    const std::uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    const auto rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
  }

  /// Uniform integer in [0, bound), bound >= 1. Rejection sampling, unbiased.
  std::uint32_t next_below(std::uint32_t bound) {
    const std::uint32_t threshold = (0u - bound) % bound;
    for (;;) {
      const std::uint32_t r = next_u32();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform double in [0, 1) with 32-bit resolution.
  double next_double() { return next_u32() * 0x1p-32; }

 private:
  std::uint64_t state_;
  std::uint64_t inc_;
};

}  // namespace uavrl
