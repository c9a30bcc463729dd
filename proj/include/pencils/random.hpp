#pragma once

#include <cstdint>
#include <random>

namespace pencils {

/// SplitMix64 finalizer; spreads nearby seeds into unrelated states.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// mt19937_64 whose stream for item i is seeded by splitmix64(seed + i * golden ratio), so each item
/// can be generated independently of the others.
class ItemRng {
 public:
  ItemRng(std::uint64_t seed, std::uint64_t index) : engine_(splitmix64(seed + index * 0x9E3779B97F4A7C15ULL)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi] by rejection, identical on every platform.
  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do r = next();
    while (r >= limit);
    return lo + static_cast<long>(r % span);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pencils
