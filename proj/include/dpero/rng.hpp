#pragma once

#include <cstdint>
#include <string_view>

namespace dpero {

// Deterministic 64-bit generator (splitmix64). Used instead of <random>
// engines plus std::uniform_*_distribution because the distribution
// algorithms there are implementation-defined; every draw below is fully
// specified, so a seed reproduces the same stream on any platform.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [0, n), n > 0. Rejection keeps the draw unbiased.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi].
  double next_double(double lo, double hi) {
    return lo + next_double() * (hi - lo);
  }

private:
  std::uint64_t state_;
};

// Stable FNV-1a used to turn stream tags into 64-bit constants.
constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// splitmix64 finalizer, used as a stateless mixer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

// Derives named substreams from one master seed. Distinct tags (and indices)
// give independent streams; the mapping is part of the reproducibility
// contract and must never change.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag) {
  return mix64(seed ^ fnv1a(tag));
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag,
                                    std::uint64_t a) {
  return mix64(derive_seed(seed, tag) ^ mix64(a + 0x9e3779b97f4a7c15ULL));
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag,
                                    std::uint64_t a, std::uint64_t b) {
  return mix64(derive_seed(seed, tag, a) ^ mix64(b + 0x2545f4914f6cdd1dULL));
}

}  // namespace dpero
