#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "congaps/primes.hpp"
#include "congaps/report.hpp"

namespace congaps {

// t(H) = exp((log H)(log log log H) / (2 log log H)); needs H > e^e.
double t_of_H(double H);

// The prime set P(H) and the modulus Q (kept as its distinct prime factors;
// the integer itself is never formed).
struct ShiuConstruction {
  u64 H = 0;
  u64 q = 0;
  u64 a = 0;  // reduced mod q
  u64 p0 = 1;
  std::optional<double> tH;  // set only when a != 1 mod q
  std::vector<std::uint32_t> script_p;
  std::vector<u64> q_primes;
  // Distinct primes dividing Q: q_primes together with P(H) \ {p0}, ascending.
  std::vector<u64> modulus_primes;
  bool regime_ok = false;

  bool a_is_one() const { return a == 1 % q; }
};

ShiuConstruction build_construction(u64 H, u64 q, u64 a, u64 p0, const PrimeTable& table);

double phi_over_Q(const ShiuConstruction& c);

struct ResidueSets {
  u64 S_count = 0;
  u64 T_count = 0;
  std::optional<std::vector<u64>> S_members;
  std::optional<std::vector<u64>> T_members;
  double phiQ_over_Q = 0.0;
};

struct ResidueSetOptions {
  bool keep_members = false;
  unsigned threads = 1;
};

// Splits {1 <= h <= H : (Q, h) = 1} by whether h = a mod q.
ResidueSets compute_S_T(const ShiuConstruction& c, const SpfTable& spf, const ResidueSetOptions& opts = {});

// |S| - |T| against the lower bound for the construction's case; the verdict
// is the observed inequality and the note carries the regime annotation.
ComparisonReport lemma34_check(const ShiuConstruction& c, const ResidueSets& sets);

// |T| log H / H, informational.
ComparisonReport t_bound_report(const ShiuConstruction& c, const ResidueSets& sets);

// Lower-bound constant (1/2)(1 - 1/e) e^{gamma/2} used for the a != 1 case.
double lemma34_case_b_constant();

nlohmann::ordered_json shiu_report_json(const ShiuConstruction& c, const ResidueSets& sets);

}  // namespace congaps
