#pragma once

#include <cstdint>

namespace gpss {

// Deterministic primality test, exact for all 64-bit inputs.
bool is_prime(std::uint64_t u);

// Smallest prime p >= m (m <= 2 yields 2). Throws "overflow" if no prime
// at or above m fits in 64 bits.
std::uint64_t next_prime_at_least(std::uint64_t m);

}  // namespace gpss
