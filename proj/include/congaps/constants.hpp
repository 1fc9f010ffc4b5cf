#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

#include "congaps/characters.hpp"
#include "congaps/primes.hpp"

namespace congaps {

inline constexpr double kEulerGamma = std::numbers::egamma_v<double>;

// L(1, chi) for non-principal chi. The partial sum sum_{n <= N} chi(n)/n is
// taken far enough that the Abel-summation tail bound 2 B / N stays below
// tol, where B bounds |sum_{n <= t} chi(n)| (Polya-Vinogradov, or the exact
// period maximum when larger).
std::complex<double> l_one(const Character& chi, double tol);

// Partial sum sum_{n <= N} chi(n)/n, grouped by residue class.
std::complex<double> l_partial_sum(const Character& chi, long double N);

// max_t |sum_{n <= t} chi(n)| over one period (exact for non-principal chi).
double max_partial_character_sum(const Character& chi);

// Truncated Euler product prod_{p <= table.limit} (1 - chi(p) p^{-sigma})^{-1}.
std::complex<double> l_euler_product(const Character& chi, double sigma, const PrimeTable& table);

// Theta(1): exp(-sum over p not 1 mod q, m >= 2 with p^m = 1 mod q of 1/(m p^m)).
double theta_at_one(u64 q, double tol);

double c_of_q(u64 q, double tol);

// Gamma on (0, 2].
double gamma_function(double x);

// prod_{p | q} (1 + p^{-sigma}).
double pi1_product(u64 q, double sigma);
// prod_{p <= Y, p = 1 mod q} (1 + p^{-sigma}).
double pi2_product(u64 q, double Y, double sigma, const PrimeTable& table);

// c(delta) bounding |log Theta(s)| for Re s >= 1/2 + delta.
double theta_log_bound(double delta);

struct ConstantsBundle {
  u64 q = 1;
  u64 phi_q = 1;
  double gamma_euler = kEulerGamma;
  // (character index in the table, L(1, chi)) for every non-principal chi.
  std::vector<std::pair<std::size_t, std::complex<double>>> l_values;
  std::complex<double> l_product{1.0, 0.0};
  double theta1 = 1.0;
  double c_q = 1.0;
  double gamma_recip = 1.0;  // 1 / Gamma(1/phi(q))
  double tol = 0.0;
};

// Memoized per (q, tol) for the lifetime of the process; thread-safe.
const ConstantsBundle& constants_bundle(u64 q, double tol);

}  // namespace congaps
