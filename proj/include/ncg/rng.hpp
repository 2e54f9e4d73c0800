#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace ncg {

/// Deterministic 64-bit PRNG stream. Bounded integers and unit reals are
/// derived from raw engine output here rather than through the standard
/// distributions, whose algorithms differ between library vendors.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for one purpose ("topology", "ownership", ...)
  /// derived from a run seed.
  static Rng substream(std::uint64_t seed, std::string_view purpose);

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer, used for seed derivation.
std::uint64_t mix64(std::uint64_t x);

}  // namespace ncg
