#pragma once

#include <cstdint>

namespace spinbound {

/// SplitMix64 (Steele/Lea/Flood). Chosen because its output is fixed by the
/// standard, so seeded ensembles are reproducible across compilers and
/// platforms, unlike std::uniform_real_distribution.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform on [-1, 1).
  double next_pm1() { return 2.0 * next_unit() - 1.0; }

 private:
  std::uint64_t state_;
};

/// Derives an independent child seed. Streams indexed by (seed, stream) are
/// decorrelated by two rounds of the SplitMix64 mixer, making the generator
/// splittable: term i of an ensemble draws from split_seed(seed, i) and is
/// unaffected by how many values other terms consume.
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 mixer(seed ^ (0x632BE59BD9B4E019ULL + stream * 0x9E3779B97F4A7C15ULL));
  mixer.next_u64();
  return mixer.next_u64();
}

}  // namespace spinbound
