#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace tamics {

// SplitMix64 (Steele, Lea & Flood; same update as used by java.util.SplittableRandom).
// Pure 64-bit integer arithmetic, so streams are identical on every platform.
// Substreams for parallel work are derived by hashing (seed, stream index)
// through the same finalizer, which keeps results independent of worker count.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t x = (state_ += 0x9e3779b97f4a7c15ULL);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound) by rejection (bound > 0).
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

  // Independent substream for the idx-th parallel task of this stream.
  static Rng substream(std::uint64_t seed, std::uint64_t idx) {
    Rng mix(seed ^ (0x632be59bd9b4e019ULL + idx));
    std::uint64_t derived = mix.next_u64();
    mix.next_u64();
    return Rng(derived ^ seed);
  }

  // Symmetric Dirichlet(1) draw over z components (normalized exponentials).
  std::vector<double> next_dirichlet(int z) {
    std::vector<double> v(z);
    double sum = 0.0;
    for (int i = 0; i < z; ++i) {
      double u = next_double();
      // -log(0) guard: shift away from zero.
      if (u <= 0.0) u = 0x1.0p-53;
      v[i] = -std::log(u);
      sum += v[i];
    }
    for (int i = 0; i < z; ++i) v[i] /= sum;
    return v;
  }

 private:
  std::uint64_t state_;
};

}  // namespace tamics
