#include "gpss/number_theory.hpp"

#include <limits>

#include "gpss/errors.hpp"

namespace gpss {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Witness set deterministic for all n < 3.3 * 10^24, so for all 64-bit n.
constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin(u64 n) {
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : kWitnesses) {
    if (a % n == 0) continue;
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
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

}  // namespace

bool is_prime(u64 u) {
  if (u < 2) return false;
  for (u64 p : {u64(2), u64(3), u64(5), u64(7)}) {
    if (u == p) return true;
    if (u % p == 0) return false;
  }
  return miller_rabin(u);
}

u64 next_prime_at_least(u64 m) {
  if (m <= 2) return 2;
  u64 candidate = m | 1;  // first odd >= m
  for (;; candidate += 2) {
    if (is_prime(candidate)) return candidate;
    if (candidate > std::numeric_limits<u64>::max() - 2)
      throw PreconditionError("overflow", "no prime at or above the requested value fits in 64 bits");
  }
}

}  // namespace gpss
