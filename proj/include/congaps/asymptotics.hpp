#pragma once

#include "congaps/constants.hpp"
#include "congaps/primes.hpp"
#include "congaps/report.hpp"

namespace congaps {

// prod_{p <= X, p = 1 mod q} (1 - 1/p)^{-1}, accumulated in log space.
double mertens_ap_product(u64 q, u64 X, const PrimeTable& table);

// e^{gamma/phi(q)} c(q) (log X)^{1/phi(q)}; X > 1.
double mertens_prediction(u64 q, double X, const ConstantsBundle& bundle);

// Number of n <= X all of whose prime factors are = 1 mod q and > Y
// (n = 1 included), by depth-first enumeration of products of allowed primes.
u64 count_restricted(u64 X, u64 q, double Y, const PrimeTable& table);

// prod_{p <= Y, p = 1 mod q} (1 - 1/p).
double restricted_prime_factor(u64 q, double Y, const PrimeTable& table);

// (c(q)/Gamma(1/phi(q))) X (log X)^{1/phi(q) - 1} prod_{p <= Y, p = 1 mod q}(1 - 1/p).
double lemma33_prediction(double X, u64 q, double Y, const ConstantsBundle& bundle, const PrimeTable& table);

}  // namespace congaps
