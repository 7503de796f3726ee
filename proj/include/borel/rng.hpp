#ifndef BOREL_RNG_HPP
#define BOREL_RNG_HPP

#include <cstdint>

#include "borel/rational.hpp"

namespace borel {

/// splitmix64: fixed, platform-independent 64-bit generator. Per-trial
/// streams are derived as stream(seed, trial) so parallel schedules and
/// reruns sample identically.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : s_(seed) {}

  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
    g.next();  // decorrelate nearby (seed, index) pairs
    return g;
  }

  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n) by 128-bit multiply-shift (no platform-dependent
  /// distribution code).
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  long range(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Small-height random rational: numerator in [-9, 9], denominator in [1, 9].
  Rational rational() {
    return Rational(range(-9, 9), range(1, 9));
  }

  Rational nonzero_rational() {
    for (;;) {
      Rational r = rational();
      if (!r.is_zero()) return r;
    }
  }

  double uniform() {  // [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
  std::uint64_t s_;
};

}  // namespace borel

#endif
