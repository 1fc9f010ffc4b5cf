#include "congaps/oracles.hpp"

#include <cmath>

namespace congaps::oracle {

std::vector<u64> trial_division_primes(u64 limit) {
  std::vector<u64> out;
  for (u64 n = 2; n <= limit; ++n)
    if (is_prime_trial(n)) out.push_back(n);
  return out;
}

std::vector<u64> restricted_prefix_counts(u64 limit, u64 q, double Y) {
  std::vector<u64> counts(limit + 1, 0);
  for (u64 n = 1; n <= limit; ++n) {
    bool ok = true;
    for (const auto& [p, e] : factorize(n)) {
      if (p % q != 1 % q || !(static_cast<double>(p) > Y)) {
        ok = false;
        break;
      }
    }
    counts[n] = counts[n - 1] + (ok ? 1 : 0);
  }
  return counts;
}

bool in_script_p(u64 p, u64 H, u64 q, u64 a) {
  const double h = static_cast<double>(H);
  const double pd = static_cast<double>(p);
  const double lh = std::log(h);
  const double top = h / (lh * lh);
  const u64 r = p % q;
  a %= q;
  if (a == 1 % q) return (r == 1 && pd <= lh) || (r != 1 && pd <= top);
  const double t = std::exp(lh * std::log(std::log(lh)) / (2.0 * std::log(lh)));
  return (r == 1 && pd <= lh) || (r != 1 && r != a && pd <= top) || (r == 1 && t < pd && pd <= top) ||
         (r == a && pd <= h / t);
}

SplitCounts residue_split(u64 H, u64 q, u64 a, const std::vector<u64>& modulus_primes) {
  SplitCounts out;
  for (u64 h = 1; h <= H; ++h) {
    bool coprime = true;
    for (u64 p : modulus_primes) {
      if (p > h) break;
      if (gcd(h, p) != 1) {
        coprime = false;
        break;
      }
    }
    if (!coprime) continue;
    if (h % q == a % q) {
      ++out.s;
      out.s_members.push_back(h);
    } else {
      ++out.t;
      out.t_members.push_back(h);
    }
  }
  return out;
}

u64 congruent_pair_count(u64 X, u64 q, u64 a, double epsilon) {
  u64 count = 0;
  u64 prev = 0;
  for (u64 n = 2;; ++n) {
    if (!is_prime_trial(n)) continue;
    if (prev != 0 && prev % q == a % q && n % q == a % q &&
        static_cast<double>(n - prev) < epsilon * std::log(static_cast<double>(prev)))
      ++count;
    if (n > X) break;
    prev = n;
  }
  return count;
}

}  // namespace congaps::oracle
