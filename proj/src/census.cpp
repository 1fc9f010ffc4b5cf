#include "congaps/census.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "congaps/error.hpp"

namespace congaps {

namespace {

void check_census_args(u64 X, u64 q, u64 a, double epsilon, const PrimeTable& table) {
  if (q < 3) throw DomainError("census: q must be >= 3");
  if (gcd(a % q, q) != 1) throw DomainError("census: gcd(a, q) must be 1");
  if (!(epsilon > 0.0)) throw DomainError("census: epsilon must be > 0");
  if (X > table.limit()) throw OutOfRangeError("census: X exceeds prime table limit");
}

}  // namespace

void for_each_congruent_pair(u64 X, u64 q, u64 a, double epsilon, const PrimeTable& table,
                             const std::function<void(const CongruentPair&)>& visit) {
  check_census_args(X, q, a, epsilon, table);
  a %= q;
  const auto primes = table.primes();
  const std::size_t n = table.count_upto(X);
  for (std::size_t i = 0; i < n; ++i) {
    const u64 p = primes[i];
    if (p % q != a) continue;
    const u64 next = i + 1 < primes.size() ? primes[i + 1] : next_prime_after(p);
    if (next % q != a) continue;
    if (static_cast<double>(next - p) < epsilon * std::log(static_cast<double>(p))) visit({p, next});
  }
}

CensusResult find_congruent_pairs(u64 X, u64 q, u64 a, double epsilon, const PrimeTable& table,
                                  const CensusOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  CensusResult r;
  r.X = X;
  r.q = q;
  r.a = a % std::max<u64>(q, 1);
  r.epsilon = epsilon;
  for_each_congruent_pair(X, q, a, epsilon, table, [&](const CongruentPair& pr) {
    ++r.pair_count;
    if (r.pairs.size() < opts.max_pairs) r.pairs.push_back(pr);
  });
  const double x = static_cast<double>(X);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  try {
    r.bound_thm11 = theorem11_bound(x, opts.thm11_c);
  } catch (const DomainError&) {
    r.bound_thm11 = nan;
  }
  try {
    r.bound_shiu = shiu_bound(x, q, r.a, opts.shiu_C);
  } catch (const DomainError&) {
    r.bound_shiu = nan;
  }
  r.wall_time = std::chrono::steady_clock::now() - start;
  return r;
}

double theorem11_bound(double X, double c) {
  if (!(X >= 16.0)) throw DomainError("theorem11_bound: X must be >= 16");
  if (!(c > 0.0)) throw DomainError("theorem11_bound: c must be > 0");
  return std::pow(X, 1.0 - c / std::log(std::log(X)));
}

double shiu_bound(double X, u64 q, u64 a, double C) {
  if (q < 3) throw DomainError("shiu_bound: q must be >= 3");
  if (!(C > 0.0)) throw DomainError("shiu_bound: C must be > 0");
  if (!(X > 1.0)) throw DomainError("shiu_bound: X must exceed 1");
  const double l1 = std::log(X);
  const double l2 = std::log(l1);
  const double l3 = l2 > 0.0 ? std::log(l2) : -1.0;
  const double inv_phi = 1.0 / static_cast<double>(euler_phi(q));
  const u64 r = a % q;
  double eps = 0.0;
  if (r == 1 || r == q - 1) {
    if (!(l3 > 0.0)) throw DomainError("shiu_bound: log log log X must be positive (X > e^e)");
    eps = C * std::pow(l3 / l2, inv_phi);
  } else {
    const double l4 = l3 > 0.0 ? std::log(l3) : -1.0;
    if (!(l4 > 0.0)) throw DomainError("shiu_bound: log log log log X must be positive (X > e^{e^e})");
    eps = C * std::pow(l3 * l3 / (l2 * l4), inv_phi);
  }
  return std::pow(X, 1.0 - eps);
}

nlohmann::ordered_json census_report_json(const CensusResult& r, bool include_timing) {
  auto num_or_null = [](double v) { return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr); };
  nlohmann::ordered_json j;
  j["X"] = r.X;
  j["q"] = r.q;
  j["a"] = r.a;
  j["epsilon"] = r.epsilon;
  j["pair_count"] = r.pair_count;
  j["bound_thm11"] = num_or_null(r.bound_thm11);
  j["bound_shiu"] = num_or_null(r.bound_shiu);
  auto pairs = nlohmann::ordered_json::array();
  for (const auto& p : r.pairs) pairs.push_back({p.p, p.next});
  j["sample_pairs"] = pairs;
  if (include_timing)
    j["wall_time_ms"] = std::chrono::duration<double, std::milli>(r.wall_time).count();
  return j;
}

}  // namespace congaps
