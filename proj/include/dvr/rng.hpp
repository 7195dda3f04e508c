#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

namespace dvr {

/// Seeded sampler used by every randomized checker.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Bounded draws use rejection sampling on raw engine output rather
/// than std::uniform_int_distribution (whose algorithm is unspecified), so a
/// given seed produces the same samples on every platform and toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("empty sampling range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<long>(next());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t draw;
    do {
      draw = next();
    } while (draw >= limit);
    return static_cast<long>(static_cast<std::uint64_t>(lo) + draw % span);
  }

  /// True with probability num/den.
  bool chance(long num, long den) { return uniform(0, den - 1) < num; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dvr
