#include "congaps/arith.hpp"

#include <numeric>

#include "congaps/error.hpp"

namespace congaps {

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<u64> distinct_prime_factors(u64 n) {
  std::vector<u64> out;
  for (const auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

u64 euler_phi(u64 n) {
  if (n == 0) return 0;
  u64 result = n;
  for (u64 p : distinct_prime_factors(n)) result = result / p * (p - 1);
  return result;
}

u64 multiplicative_order(u64 a, u64 m) {
  if (m < 2 || gcd(a % m, m) != 1)
    throw DomainError("multiplicative_order: a must be a unit modulo m >= 2");
  // The order divides phi(m): strip prime factors while the power stays 1.
  u64 order = euler_phi(m);
  for (const auto& [p, e] : factorize(order)) {
    for (unsigned i = 0; i < e; ++i) {
      if (powmod(a, order / p, m) == 1)
        order /= p;
      else
        break;
    }
  }
  return order;
}

bool is_prime_trial(u64 n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (u64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

u64 next_prime_after(u64 n) {
  u64 c = n + 1;
  while (!is_prime_trial(c)) ++c;
  return c;
}

}  // namespace congaps
