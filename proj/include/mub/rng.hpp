#pragma once

#include <cstdint>

namespace mub {

// SplitMix64 output mixer (Steele, Lea & Flood, "Fast splittable
// pseudorandom number generators", OOPSLA 2014). Bijective on 64-bit
// words; also used standalone to derive substream seeds.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based SplitMix64 stream: the state walks the golden-ratio
// increment and each output is the mixed counter value. Pure integer
// arithmetic, so sequences are identical across platforms.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept { return mix64(state_ += kGoldenGamma); }

  // Unbiased draw from [0, bound) by rejection of the short final stripe.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit_double() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// Seed for the substream used by trial `stream` of a run seeded with
// `seed`: the two inputs are decorrelated by independent mixing.
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  return mix64(seed ^ mix64(stream + SplitMix64::kGoldenGamma));
}

}  // namespace mub
