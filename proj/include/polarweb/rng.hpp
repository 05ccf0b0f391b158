#pragma once

// Seeded pseudo-random source shared by every sampling operation. Draws are
// implemented on top of the raw mt19937_64 stream so that results do not
// depend on the standard library's distribution implementations.

#include <cstdint>
#include <random>

#include "polarweb/mpoly.hpp"

namespace polarweb {

class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
  }

  /// Uniform double in [0, 1).
  double uniform_real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Numerator uniform in [-bound, bound], denominator uniform in [1, bound].
  Rational rational(std::int64_t bound = 100) {
    const std::int64_t num = uniform_int(-bound, bound);
    const std::int64_t den = uniform_int(1, bound);
    Rational q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
  }

  /// Child generator with an independent stream.
  Rng fork() { return Rng(engine_() ^ 0x9e3779b97f4a7c15ULL); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace polarweb
