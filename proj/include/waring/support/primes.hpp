#pragma once

#include <cstdint>

namespace waring {

// Deterministic Miller-Rabin, valid for the whole 64-bit range.
bool is_prime_u64(std::uint64_t n);

// Largest prime p < bound with p % mod == rem. Returns 0 when none exists.
std::uint64_t largest_prime_below(std::uint64_t bound, std::uint64_t mod = 1, std::uint64_t rem = 0);

// Default working modulus: the largest prime below 2^62 that is 1 mod k
// (k = 1 places no congruence). `index` walks further down the same residue
// class so retries can pick fresh primes deterministically.
std::uint64_t auto_prime(unsigned k = 1, unsigned index = 0);

inline constexpr std::uint64_t kAutoPrimeBound = std::uint64_t(1) << 62;

}  // namespace waring
