#include "congaps/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "congaps/error.hpp"

namespace congaps {

double mertens_ap_product(u64 q, u64 X, const PrimeTable& table) {
  if (q < 1) throw DomainError("mertens_ap_product: q must be >= 1");
  if (X > table.limit()) throw OutOfRangeError("mertens_ap_product: X exceeds table limit");
  long double log_sum = 0.0L;
  for (std::uint32_t p : table.residue_class(q, 1 % q)) {
    if (p > X) break;
    log_sum -= std::log1p(-1.0L / p);
  }
  return static_cast<double>(std::exp(log_sum));
}

double mertens_prediction(u64 q, double X, const ConstantsBundle& bundle) {
  if (bundle.q != q) throw DomainError("mertens_prediction: bundle is for a different modulus");
  if (!(X > 1.0)) throw DomainError("mertens_prediction: X must exceed 1");
  const double inv_phi = 1.0 / static_cast<double>(bundle.phi_q);
  return std::exp(kEulerGamma * inv_phi) * bundle.c_q * std::pow(std::log(X), inv_phi);
}

namespace {

struct RestrictedCounter {
  std::span<const std::uint32_t> allowed;

  std::size_t primes_upto(u64 bound, std::size_t from) const {
    return static_cast<std::size_t>(
        std::upper_bound(allowed.begin() + static_cast<std::ptrdiff_t>(from), allowed.end(), bound) - allowed.begin());
  }

  // Products of allowed primes with indices >= start that are <= bound
  // (the empty product included).
  u64 count(std::size_t start, u64 bound) const {
    u64 total = 1;
    for (std::size_t i = start; i < allowed.size(); ++i) {
      const u64 p = allowed[i];
      if (p > bound) break;
      if (p * p > bound) {
        // Only single primes remain.
        total += primes_upto(bound, i) - i;
        break;
      }
      for (u64 pk = p; pk <= bound; pk *= p) {
        total += count(i + 1, bound / pk);
        if (pk > bound / p) break;
      }
    }
    return total;
  }
};

}  // namespace

u64 count_restricted(u64 X, u64 q, double Y, const PrimeTable& table) {
  if (X > table.limit()) throw OutOfRangeError("count_restricted: X exceeds table limit");
  if (q < 1) throw DomainError("count_restricted: q must be >= 1");
  if (!(Y >= 1.0)) throw DomainError("count_restricted: Y must be >= 1");
  if (X == 0) return 0;
  auto cls = table.residue_class(q, 1 % q);
  const auto first = static_cast<std::size_t>(
      std::upper_bound(cls.begin(), cls.end(), Y, [](double y, std::uint32_t p) { return y < static_cast<double>(p); }) -
      cls.begin());
  const auto last = static_cast<std::size_t>(std::upper_bound(cls.begin(), cls.end(), X) - cls.begin());
  RestrictedCounter counter{cls.subspan(first, last - first)};
  return counter.count(0, X);
}

double restricted_prime_factor(u64 q, double Y, const PrimeTable& table) {
  if (Y > static_cast<double>(table.limit())) throw OutOfRangeError("restricted_prime_factor: Y exceeds table limit");
  long double log_sum = 0.0L;
  for (std::uint32_t p : table.residue_class(q, 1 % q)) {
    if (static_cast<double>(p) > Y) break;
    log_sum += std::log1p(-1.0L / p);
  }
  return static_cast<double>(std::exp(log_sum));
}

double lemma33_prediction(double X, u64 q, double Y, const ConstantsBundle& bundle, const PrimeTable& table) {
  if (bundle.q != q) throw DomainError("lemma33_prediction: bundle is for a different modulus");
  if (!(X >= 3.0)) throw DomainError("lemma33_prediction: X must be >= 3");
  const double inv_phi = 1.0 / static_cast<double>(bundle.phi_q);
  const double log_x = std::log(X);
  return bundle.c_q * bundle.gamma_recip * X * std::pow(log_x, inv_phi - 1.0) * restricted_prime_factor(q, Y, table);
}

}  // namespace congaps
