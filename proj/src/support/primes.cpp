#include "waring/support/primes.hpp"

#include "waring/error.hpp"

namespace waring {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all n < 3.3 * 10^24.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t largest_prime_below(std::uint64_t bound, std::uint64_t mod, std::uint64_t rem) {
  if (bound < 3) return 0;
  std::uint64_t c = bound - 1;
  if (mod > 1) {
    rem %= mod;
    c -= (c % mod + mod - rem) % mod;
  }
  std::uint64_t step = mod > 1 ? mod : 1;
  while (c >= 2) {
    if (is_prime_u64(c)) return c;
    if (c < step) break;
    c -= step;
  }
  return 0;
}

std::uint64_t auto_prime(unsigned k, unsigned index) {
  require(k >= 1, Errc::invalid_argument, "congruence parameter must be positive");
  std::uint64_t bound = kAutoPrimeBound;
  std::uint64_t p = 0;
  for (unsigned i = 0; i <= index; ++i) {
    p = largest_prime_below(bound, k > 1 ? k : 1, 1 % (k > 1 ? k : 1));
    if (p == 0) fail(Errc::configuration, "no prime below 2^62 in the requested residue class");
    bound = p;
  }
  return p;
}

}  // namespace waring
