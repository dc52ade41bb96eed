#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace waring {

// SplitMix64. Used everywhere instead of <random> engines/distributions so
// that seeded runs produce identical streams on every platform and compiler.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) by rejection; unbiased.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  // Uniform in (0, 1]; never returns 0 so it is safe under log().
  double uniform01() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }

  // Standard complex Gaussian CN(0,1): E|z|^2 = 1, modulus^2 ~ Exp(1).
  std::complex<double> complex_gaussian() {
    double radius = std::sqrt(-std::log(uniform01()));
    double angle = 6.283185307179586476925286766559 * uniform01();
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

  // Real standard normal via Box-Muller.
  double gaussian() {
    double radius = std::sqrt(-2.0 * std::log(uniform01()));
    double angle = 6.283185307179586476925286766559 * uniform01();
    return radius * std::cos(angle);
  }

 private:
  std::uint64_t state_;
};

// Cheap stream derivation so that (seed, index) pairs give independent streams.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  Rng r(seed ^ (0x632be59bd9b4e019ULL + index * 0x9e3779b97f4a7c15ULL));
  return r.next();
}

}  // namespace waring
