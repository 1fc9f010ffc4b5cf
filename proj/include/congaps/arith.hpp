#pragma once

#include <cstdint>
#include <vector>

namespace congaps {

using u64 = std::uint64_t;
using i64 = std::int64_t;

u64 gcd(u64 a, u64 b);
u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

// Distinct prime factors of n by trial division, ascending.
std::vector<u64> distinct_prime_factors(u64 n);

// (prime, exponent) pairs, ascending by prime.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

u64 euler_phi(u64 n);

// Multiplicative order of a modulo m; requires gcd(a, m) = 1 and m >= 2.
u64 multiplicative_order(u64 a, u64 m);

// Deterministic trial-division primality test.
bool is_prime_trial(u64 n);

// Least prime strictly greater than n (trial division; intended for the
// occasional lookup just beyond a sieved range).
u64 next_prime_after(u64 n);

}  // namespace congaps
