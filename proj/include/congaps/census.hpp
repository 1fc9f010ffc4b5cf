#pragma once

#include <chrono>
#include <functional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "congaps/primes.hpp"

namespace congaps {

struct CongruentPair {
  u64 p = 0;
  u64 next = 0;
  u64 gap() const { return next - p; }
};

struct CensusOptions {
  // Keep at most this many pairs in the result (the count is always exact).
  std::size_t max_pairs = 100;
  double thm11_c = 1.0;
  double shiu_C = 1.0;
};

struct CensusResult {
  u64 X = 0;
  u64 q = 0;
  u64 a = 0;
  double epsilon = 0.0;
  u64 pair_count = 0;
  std::vector<CongruentPair> pairs;
  double bound_thm11 = 0.0;  // NaN outside the bound's domain
  double bound_shiu = 0.0;
  std::chrono::nanoseconds wall_time{0};
};

// Visits every consecutive pair p_r <= X, p_{r+1}, with both = a mod q and
// p_{r+1} - p_r < epsilon log p_r, in ascending order.
void for_each_congruent_pair(u64 X, u64 q, u64 a, double epsilon, const PrimeTable& table,
                             const std::function<void(const CongruentPair&)>& visit);

CensusResult find_congruent_pairs(u64 X, u64 q, u64 a, double epsilon, const PrimeTable& table,
                                  const CensusOptions& opts = {});

// X^{1 - c / log log X}; X >= 16, c > 0.
double theorem11_bound(double X, double c);

// X^{1 - eps(X)} with Shiu's eps(X), branch chosen by whether a = +-1 mod q.
double shiu_bound(double X, u64 q, u64 a, double C);

nlohmann::ordered_json census_report_json(const CensusResult& r, bool include_timing = true);

}  // namespace congaps
