#pragma once

// Brute-force reference computations. Nothing here calls into the sieve,
// DFS, character, or construction code paths it is used to check.

#include <cstdint>
#include <vector>

#include "congaps/arith.hpp"

namespace congaps::oracle {

// Primes <= limit by trial division of every integer.
std::vector<u64> trial_division_primes(u64 limit);

// counts[X] = #{n <= X : every prime factor of n is = 1 mod q and > Y},
// factoring each n by trial division.
std::vector<u64> restricted_prefix_counts(u64 limit, u64 q, double Y);

// Membership of prime p in P(H) evaluated straight from the set definitions.
bool in_script_p(u64 p, u64 H, u64 q, u64 a);

struct SplitCounts {
  u64 s = 0;
  u64 t = 0;
  std::vector<u64> s_members;
  std::vector<u64> t_members;
};

// Classifies h in [1, H] by gcd against each modulus prime directly.
SplitCounts residue_split(u64 H, u64 q, u64 a, const std::vector<u64>& modulus_primes);

// Consecutive congruent small-gap pairs p <= X found with trial division only.
u64 congruent_pair_count(u64 X, u64 q, u64 a, double epsilon);

}  // namespace congaps::oracle
