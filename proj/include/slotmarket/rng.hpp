#pragma once

#include <cstdint>

namespace slotmarket {

// splitmix64 (Steele/Lea/Flood). Small, fast, and fully specified, so seeded
// output is identical across platforms and standard libraries. std::mt19937
// would do, but the std distributions are not portable and we promise
// byte-identical generated instances for a given seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [lo, hi], inclusive. Rejection sampling keeps the
  // distribution exact and the byte stream reproducible.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    if (lo >= hi) return lo;
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
  }

  // True with probability pct/100.
  bool chance_pct(int pct) { return uniform(0, 99) < pct; }

 private:
  std::uint64_t state_;
};

}  // namespace slotmarket
