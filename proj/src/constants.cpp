#include "congaps/constants.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "congaps/error.hpp"

namespace congaps {

namespace {

// psi(x) for x >= 32 by the asymptotic series; truncation error < 1e-20.
long double digamma_large(long double x) {
  const long double inv = 1.0L / x;
  const long double inv2 = inv * inv;
  return std::log(x) - 0.5L * inv -
         inv2 * (1.0L / 12 - inv2 * (1.0L / 120 - inv2 * (1.0L / 252 - inv2 * (1.0L / 240 - inv2 / 132))));
}

void check_tol(double tol, const char* what) {
  if (!(tol > 1e-12 && tol < 1e-2))
    throw DomainError(std::string(what) + ": tol must lie in (1e-12, 1e-2)");
}

}  // namespace

double max_partial_character_sum(const Character& chi) {
  std::complex<double> s{0.0, 0.0};
  double best = 0.0;
  for (u64 n = 1; n <= chi.modulus(); ++n) {
    s += evaluate(chi, n);
    best = std::max(best, std::abs(s));
  }
  return best;
}

std::complex<double> l_partial_sum(const Character& chi, long double N) {
  const u64 q = chi.modulus();
  const long double qq = static_cast<long double>(q);
  // Full periods K; the leftover n in (K q, N] are summed directly.
  const long double K = std::floor(N / qq);
  constexpr long double kDirect = 32;
  std::complex<long double> acc{0.0L, 0.0L};
  for (u64 r = 1; r <= q; ++r) {
    const auto v = chi.value(r);
    if (v.zero) continue;
    // h_r = sum_{k=0}^{K-1} 1/(k q + r)
    long double h = 0.0L;
    const long double direct = std::min(K, kDirect);
    for (long double k = 0; k < direct; ++k) h += 1.0L / (k * qq + static_cast<long double>(r));
    if (K > kDirect) {
      const long double shift = static_cast<long double>(r) / qq;
      h += (digamma_large(K + shift) - digamma_large(kDirect + shift)) / qq;
    }
    for (long double n = K * qq + static_cast<long double>(r); n <= N; n += qq) h += 1.0L / n;
    const auto z = v.to_complex();
    acc += std::complex<long double>(z.real(), z.imag()) * h;
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

std::complex<double> l_one(const Character& chi, double tol) {
  if (chi.is_principal()) throw DomainError("l_one: L(1, chi) diverges for the principal character");
  check_tol(tol, "l_one");
  const double q = static_cast<double>(chi.modulus());
  const double bound = std::max(std::sqrt(q) * std::log(q), max_partial_character_sum(chi));
  // Half the budget to the tail; the residue-class evaluation is accurate to ~1e-15.
  const long double N = std::ceil(4.0L * bound / tol);
  return l_partial_sum(chi, N);
}

std::complex<double> l_euler_product(const Character& chi, double sigma, const PrimeTable& table) {
  std::complex<double> log_sum{0.0, 0.0};
  for (std::uint32_t p : table.primes()) {
    const auto v = evaluate(chi, p);
    if (v == std::complex<double>{0.0, 0.0}) continue;
    log_sum -= std::log(1.0 - v * std::pow(static_cast<double>(p), -sigma));
  }
  return std::exp(log_sum);
}

double theta_at_one(u64 q, double tol) {
  if (q < 3) throw DomainError("theta_at_one: q must be >= 3, got " + std::to_string(q));
  check_tol(tol, "theta_at_one");
  // Order of each residue class; 0 marks classes that never reach 1.
  std::vector<u64> order(q, 0);
  for (u64 r = 1; r < q; ++r)
    if (gcd(r, q) == 1) order[r] = multiplicative_order(r, q);
  // Tail over p > P of the exponent is at most 2/P, and |dTheta| <= |dexponent|.
  const auto cutoff = static_cast<u64>(std::ceil(2.0 / tol));
  long double exponent = 0.0L;
  for_each_prime(2, cutoff, [&](std::span<const std::uint32_t> seg) {
    for (std::uint32_t p : seg) {
      const u64 d = order[p % q];
      if (d < 2) continue;  // p | q or p = 1 mod q
      // sum over m = k d of 1/(m p^m) = -(1/d) log(1 - p^{-d})
      const long double pd = std::pow(static_cast<long double>(p), -static_cast<long double>(d));
      exponent += std::log1p(-pd) / static_cast<long double>(d);
    }
  });
  return static_cast<double>(std::exp(exponent));
}

double gamma_function(double x) {
  if (!(x > 0.0)) throw DomainError("gamma_function: x must be > 0");
  if (x > 2.0) throw DomainError("gamma_function: x must be <= 2");
  return std::tgamma(x);
}

double pi1_product(u64 q, double sigma) {
  if (!(sigma > 0.0)) throw DomainError("pi1_product: sigma must be > 0");
  double prod = 1.0;
  for (u64 p : distinct_prime_factors(q)) prod *= 1.0 + std::pow(static_cast<double>(p), -sigma);
  return prod;
}

double pi2_product(u64 q, double Y, double sigma, const PrimeTable& table) {
  if (!(sigma > 0.0)) throw DomainError("pi2_product: sigma must be > 0");
  if (Y > static_cast<double>(table.limit())) throw OutOfRangeError("pi2_product: Y exceeds table limit");
  if (q < 1) throw DomainError("pi2_product: q must be >= 1");
  double log_prod = 0.0;
  for (std::uint32_t p : table.residue_class(q, 1 % q)) {
    if (static_cast<double>(p) > Y) break;
    log_prod += std::log1p(std::pow(static_cast<double>(p), -sigma));
  }
  return std::exp(log_prod);
}

double theta_log_bound(double delta) {
  if (!(delta > 0.0)) throw DomainError("theta_log_bound: delta must be > 0");
  return (1.0 / (1.0 - std::pow(2.0, -(0.5 + delta)))) * (1.0 + 1.0 / (2.0 * delta));
}

namespace {

ConstantsBundle compute_bundle(u64 q, double tol) {
  ConstantsBundle b;
  b.q = q;
  b.tol = tol;
  b.phi_q = euler_phi(q);
  b.gamma_recip = 1.0 / gamma_function(1.0 / static_cast<double>(b.phi_q));
  if (q == 1) {
    b.c_q = 1.0;
    return b;
  }
  if (q == 2) {
    b.c_q = 0.5;
    return b;
  }
  const double phi = static_cast<double>(b.phi_q);
  const CharacterTable table(q);
  // Each |L(1, chi)| is well above 1e-2 for the moduli this targets, so a
  // per-factor budget of tol/(100 phi) keeps the product's relative error < tol/2.
  const double l_tol = std::max(tol / (100.0 * phi), 2e-12);
  std::complex<double> prod{1.0, 0.0};
  for (std::size_t i = 1; i < table.characters().size(); ++i) {
    const auto l = l_one(table.characters()[i], l_tol);
    b.l_values.emplace_back(i, l);
    prod *= l;
  }
  b.l_product = prod;
  b.theta1 = theta_at_one(q, tol / 2);
  const double inner = (phi / static_cast<double>(q)) * prod.real();
  if (!(inner > 0.0)) throw NumericError("c(q): character product is not positive for q = " + std::to_string(q));
  b.c_q = b.theta1 * std::pow(inner, 1.0 / phi);
  return b;
}

struct BundleCache {
  std::mutex mu;
  std::map<std::pair<u64, double>, std::shared_ptr<const ConstantsBundle>> entries;
};

BundleCache& bundle_cache() {
  static BundleCache cache;
  return cache;
}

}  // namespace

double c_of_q(u64 q, double tol) {
  if (q == 0) throw DomainError("c_of_q: q must be >= 1");
  if (q <= 2) return q == 1 ? 1.0 : 0.5;
  return constants_bundle(q, tol).c_q;
}

const ConstantsBundle& constants_bundle(u64 q, double tol) {
  if (q == 0) throw DomainError("constants_bundle: q must be >= 1");
  check_tol(tol, "constants_bundle");
  auto& cache = bundle_cache();
  {
    std::lock_guard lock(cache.mu);
    if (auto it = cache.entries.find({q, tol}); it != cache.entries.end()) return *it->second;
  }
  auto bundle = std::make_shared<const ConstantsBundle>(compute_bundle(q, tol));
  std::lock_guard lock(cache.mu);
  return *cache.entries.try_emplace({q, tol}, std::move(bundle)).first->second;
}

}  // namespace congaps
