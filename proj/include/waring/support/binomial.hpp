#pragma once

#include <cstdint>

#include "waring/error.hpp"

namespace waring {

// binomial(a, b) in exact 64-bit arithmetic. Throws Errc::overflow instead of
// wrapping; intermediate products are carried in 128 bits.
inline std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= b; ++i) {
    acc = acc * (a - b + i) / i;  // exact: prefix products of a row of Pascal's triangle
    if (acc > static_cast<unsigned __int128>(UINT64_MAX))
      fail(Errc::overflow, "binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

// ceil(a / b) for b > 0.
inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

// base^e with overflow detection.
inline std::uint64_t checked_pow(std::uint64_t base, unsigned e) {
  unsigned __int128 acc = 1;
  for (unsigned i = 0; i < e; ++i) {
    acc *= base;
    if (acc > static_cast<unsigned __int128>(UINT64_MAX)) fail(Errc::overflow, "power exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace waring
