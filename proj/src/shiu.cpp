#include "congaps/shiu.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include "congaps/constants.hpp"
#include "congaps/error.hpp"

namespace congaps {

double t_of_H(double H) {
  // log log log H > 0  <=>  H > e^e
  const double threshold = std::exp(std::numbers::e);
  if (!(H > threshold))
    throw DomainError("t(H) requires H > e^e ~ " + format_double(threshold) + ", got H = " + format_double(H));
  const double l1 = std::log(H);
  const double l2 = std::log(l1);
  const double l3 = std::log(l2);
  return std::exp(l1 * l3 / (2.0 * l2));
}

ShiuConstruction build_construction(u64 H, u64 q, u64 a, u64 p0, const PrimeTable& table) {
  if (q < 3) throw DomainError("build_construction: q must be >= 3");
  if (gcd(a % q, q) != 1) throw DomainError("build_construction: gcd(a, q) must be 1");
  if (H < 100) throw DomainError("build_construction: H must be >= 100");
  if (H > table.limit()) throw OutOfRangeError("build_construction: H exceeds prime table limit");
  const double log_h = std::log(static_cast<double>(H));
  if (p0 != 1) {
    if (!is_prime_trial(p0)) throw DomainError("p0 must be 1 or a prime, got " + std::to_string(p0));
    if (!(static_cast<double>(p0) > log_h))
      throw DomainError("p0 = " + std::to_string(p0) + " must exceed log H = " + format_double(log_h));
  }

  ShiuConstruction c;
  c.H = H;
  c.q = q;
  c.a = a % q;
  c.p0 = p0;
  c.q_primes = distinct_prime_factors(q);

  const double h = static_cast<double>(H);
  const double upper = h / (log_h * log_h);
  const u64 one = 1 % q;
  if (c.a == one) {
    for (std::uint32_t p : table.primes()) {
      const double pd = p;
      if (pd > upper && pd > log_h) break;
      const bool is_one = p % q == one;
      if ((is_one && pd <= log_h) || (!is_one && pd <= upper)) c.script_p.push_back(p);
    }
    c.regime_ok = log_h < upper;
  } else {
    const double t = t_of_H(h);
    c.tH = t;
    const double upper_a = h / t;
    const double stop = std::max({log_h, upper, upper_a});
    for (std::uint32_t p : table.primes()) {
      const double pd = p;
      if (pd > stop) break;
      const u64 r = p % q;
      const bool in_set = (r == one && pd <= log_h) ||                 // first set
                          (r != one && r != c.a && pd <= upper) ||     // second
                          (r == one && t < pd && pd <= upper) ||       // third
                          (r == c.a && pd <= upper_a);                 // fourth
      if (in_set) c.script_p.push_back(p);
    }
    c.regime_ok = log_h < t && t < upper_a && upper_a < upper;
  }

  for (std::uint32_t p : c.script_p)
    if (p != p0) c.modulus_primes.push_back(p);
  c.modulus_primes.insert(c.modulus_primes.end(), c.q_primes.begin(), c.q_primes.end());
  std::sort(c.modulus_primes.begin(), c.modulus_primes.end());
  c.modulus_primes.erase(std::unique(c.modulus_primes.begin(), c.modulus_primes.end()), c.modulus_primes.end());
  return c;
}

double phi_over_Q(const ShiuConstruction& c) {
  long double log_sum = 0.0L;
  for (u64 p : c.modulus_primes) log_sum += std::log1p(-1.0L / static_cast<long double>(p));
  return static_cast<double>(std::exp(log_sum));
}

ResidueSets compute_S_T(const ShiuConstruction& c, const SpfTable& spf, const ResidueSetOptions& opts) {
  if (spf.limit() < c.H) throw OutOfRangeError("compute_S_T: SpfTable limit below H");
  std::vector<std::uint8_t> divides_q(c.H + 1, 0);
  for (u64 p : c.modulus_primes)
    if (p <= c.H) divides_q[p] = 1;

  auto coprime = [&](u64 h) {
    while (h > 1) {
      const std::uint32_t p = spf[h];
      if (divides_q[p]) return false;
      while (h % p == 0) h /= p;
    }
    return true;
  };

  struct Chunk {
    u64 s = 0, t = 0;
    std::vector<u64> s_members, t_members;
  };
  const unsigned threads = std::max(1u, opts.threads);
  std::vector<Chunk> chunks(threads);
  auto work = [&](unsigned idx) {
    const u64 lo = 1 + c.H * idx / threads;
    const u64 hi = c.H * (idx + 1) / threads;
    Chunk& ch = chunks[idx];
    for (u64 h = lo; h <= hi; ++h) {
      if (!coprime(h)) continue;
      if (h % c.q == c.a) {
        ++ch.s;
        if (opts.keep_members) ch.s_members.push_back(h);
      } else {
        ++ch.t;
        if (opts.keep_members) ch.t_members.push_back(h);
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work, i);
  }

  ResidueSets out;
  if (opts.keep_members) {
    out.S_members.emplace();
    out.T_members.emplace();
  }
  for (auto& ch : chunks) {
    out.S_count += ch.s;
    out.T_count += ch.t;
    if (opts.keep_members) {
      out.S_members->insert(out.S_members->end(), ch.s_members.begin(), ch.s_members.end());
      out.T_members->insert(out.T_members->end(), ch.t_members.begin(), ch.t_members.end());
    }
  }
  out.phiQ_over_Q = phi_over_Q(c);
  return out;
}

double lemma34_case_b_constant() { return 0.5 * (1.0 - std::exp(-1.0)) * std::exp(kEulerGamma / 2.0); }

namespace {

std::map<std::string, double> construction_params(const ShiuConstruction& c, const ResidueSets& sets) {
  return {{"H", static_cast<double>(c.H)},
          {"q", static_cast<double>(c.q)},
          {"a", static_cast<double>(c.a)},
          {"p0", static_cast<double>(c.p0)},
          {"phiQ_over_Q", sets.phiQ_over_Q},
          {"regime_ok", c.regime_ok ? 1.0 : 0.0}};
}

std::string regime_note(const ShiuConstruction& c) {
  const double h = static_cast<double>(c.H);
  const double l2 = std::log(std::log(h));
  const double l3 = std::log(l2);
  std::string note;
  if (!c.regime_ok) note = "asymptotic regime not reached: log H < t(H) < H/t(H) < H/(log H)^2 fails";
  // Admissible moduli: q <= loglog H / logloglog H (a = 1), half that otherwise.
  const double q_max = c.a_is_one() ? l2 / l3 : l2 / (2.0 * l3);
  if (!(l3 > 0.0) || static_cast<double>(c.q) > q_max) {
    if (!note.empty()) note += "; ";
    note += "asymptotic regime not reached: q = " + std::to_string(c.q) + " exceeds the admissible bound " +
            format_double(q_max);
  }
  if (note.empty()) note = "ordering and modulus bounds hold; H is not certified sufficiently large";
  return note;
}

}  // namespace

ComparisonReport lemma34_check(const ShiuConstruction& c, const ResidueSets& sets) {
  const double h = static_cast<double>(c.H);
  const double phi = static_cast<double>(euler_phi(c.q));
  const double g = gamma_function(1.0 / phi);
  double rhs = h / g * sets.phiQ_over_Q;
  if (!c.a_is_one()) rhs *= 0.4 / (1.0 + phi);
  const double lhs = static_cast<double>(sets.S_count) - static_cast<double>(sets.T_count);

  ComparisonReport r;
  r.label = c.a_is_one() ? "lemma34_a_equiv_1" : "lemma34_a_not_equiv_1";
  r.actual = lhs;
  r.predicted = rhs;
  r.ratio = lhs / rhs;
  r.params = construction_params(c, sets);
  r.criterion = ComparisonReport::Criterion::AtLeast;
  r.pass = lhs >= rhs;
  r.note = regime_note(c);
  return r;
}

ComparisonReport t_bound_report(const ShiuConstruction& c, const ResidueSets& sets) {
  const double h = static_cast<double>(c.H);
  ComparisonReport r;
  r.label = "t_bound";
  r.actual = static_cast<double>(sets.T_count) * std::log(h) / h;
  r.predicted = 1.0;
  r.ratio = r.actual;
  r.params = construction_params(c, sets);
  r.criterion = ComparisonReport::Criterion::Report;
  r.pass = std::isfinite(r.ratio);
  r.note = "implied constant unspecified; reported only";
  return r;
}

nlohmann::ordered_json shiu_report_json(const ShiuConstruction& c, const ResidueSets& sets) {
  const auto l34 = lemma34_check(c, sets);
  const auto tb = t_bound_report(c, sets);
  nlohmann::ordered_json j;
  j["H"] = c.H;
  j["q"] = c.q;
  j["a"] = c.a;
  j["p0"] = c.p0;
  j["tH"] = c.tH ? nlohmann::ordered_json(*c.tH) : nlohmann::ordered_json(nullptr);
  j["regime_ok"] = c.regime_ok;
  j["P_size"] = c.script_p.size();
  j["S_count"] = sets.S_count;
  j["T_count"] = sets.T_count;
  j["phiQ_over_Q"] = sets.phiQ_over_Q;
  j["lemma34_lhs"] = l34.actual;
  j["lemma34_rhs"] = l34.predicted;
  j["lemma34_ratio"] = l34.ratio;
  j["t_bound_ratio"] = tb.ratio;
  return j;
}

}  // namespace congaps
