#include <doctest.h>

#include <cmath>
#include <numbers>

#include "congaps/characters.hpp"
#include "congaps/constants.hpp"
#include "congaps/error.hpp"
#include "congaps/primes.hpp"

using namespace congaps;

TEST_CASE("L(1, chi) closed forms") {
  const auto t4 = build_character_table(4);
  const auto l4 = l_one(t4.characters()[1], 1e-9);
  CHECK(std::abs(l4.real() - std::numbers::pi / 4) < 1e-8);
  CHECK(std::abs(l4.imag()) < 1e-9);
  const auto t3 = build_character_table(3);
  CHECK(std::abs(l_one(t3.characters()[1], 1e-9).real() - std::numbers::pi / (3 * std::sqrt(3.0))) < 1e-8);
  CHECK_THROWS_AS(l_one(t3.principal(), 1e-8), DomainError);
  CHECK_THROWS_AS(l_one(t3.characters()[1], 0.5), DomainError);
}

TEST_CASE("L(1, chi) for a complex character pairs with its conjugate") {
  const auto t = build_character_table(5);
  for (const auto& chi : t.characters()) {
    if (chi.is_principal() || chi.is_real()) continue;
    const auto a = l_one(chi, 1e-9), b = l_one(chi.conjugate(), 1e-9);
    CHECK(std::abs(a - std::conj(b)) < 1e-9);
  }
}

TEST_CASE("L values of real characters are real and positive") {
  for (u64 q : {5u, 7u, 8u, 12u}) {
    const auto t = build_character_table(q);
    for (const auto& chi : t.characters()) {
      if (chi.is_principal() || !chi.is_real()) continue;
      const auto l = l_one(chi, 1e-8);
      CHECK(l.real() > 0.0);
      CHECK(std::abs(l.imag()) <= 1e-9);
    }
  }
}

TEST_CASE("Theta(1) and c(q)") {
  // Direct truncated double sum for q = 3: only p = 2 mod 3 contributes, d = 2.
  const auto table = sieve_primes(1'000'000);
  double e = 0.0;
  for (auto p : table.primes())
    if (p % 3 == 2) e += -0.5 * std::log1p(-1.0 / (static_cast<double>(p) * p));
  const double theta_oracle = std::exp(-e);
  const double theta = theta_at_one(3, 1e-6);
  CHECK(theta == doctest::Approx(0.841).epsilon(1e-3));
  CHECK(std::abs(theta - theta_oracle) < 1e-6);
  CHECK_THROWS_AS(theta_at_one(2, 1e-6), DomainError);

  CHECK(c_of_q(1, 1e-6) == 1.0);
  CHECK(c_of_q(2, 1e-6) == 0.5);
  const double c3 = theta_oracle * std::sqrt(2.0 / 3.0 * std::numbers::pi / (3 * std::sqrt(3.0)));
  CHECK(std::abs(c_of_q(3, 1e-6) - c3) < 2e-6);
  CHECK(c_of_q(3, 1e-6) == doctest::Approx(0.534).epsilon(1e-3));
}

TEST_CASE("gamma function") {
  CHECK(gamma_function(1.0) == doctest::Approx(1.0));
  CHECK(gamma_function(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)));
  const double g14 = gamma_function(0.25);
  CHECK(g14 == doctest::Approx(3.62561).epsilon(1e-5));
  // Reflection against Gamma(3/4).
  CHECK(g14 * gamma_function(0.75) == doctest::Approx(std::numbers::pi / std::sin(std::numbers::pi / 4)));
  for (double x : {0.1, 0.3, 0.7, 0.9}) CHECK(gamma_function(x + 1) == doctest::Approx(x * gamma_function(x)));
  CHECK_THROWS_AS(gamma_function(0.0), DomainError);
  CHECK_THROWS_AS(gamma_function(-1.0), DomainError);
}

TEST_CASE("Pi products") {
  CHECK(pi1_product(6, 1.0) == doctest::Approx(2.0));
  const auto table = sieve_primes(1000);
  CHECK(pi2_product(3, 5, 1.0, table) == 1.0);
  CHECK(pi2_product(3, 10, 1.0, table) == doctest::Approx(8.0 / 7.0));
  CHECK(pi2_product(3, 100, 1.5, table) >= 1.0);
}

TEST_CASE("Euler product at sigma = 1.5 approaches the Dirichlet series") {
  const auto table = sieve_primes(2'000'000);
  const auto t = build_character_table(4);
  const auto prod = l_euler_product(t.characters()[1], 1.5, table);
  // Direct alternating sum of n^{-3/2} over odd n.
  double s = 0.0;
  for (int n = 1; n < 4'000'000; n += 2) s += ((n % 4 == 1) ? 1.0 : -1.0) / std::pow(n, 1.5);
  CHECK(std::abs(prod.real() - s) < 1e-3);
}

TEST_CASE("constants bundle") {
  const auto& b = constants_bundle(4, 1e-8);
  CHECK(b.phi_q == 2);
  CHECK(b.gamma_euler == doctest::Approx(0.5772156649015329));
  CHECK(b.gamma_recip == doctest::Approx(1.0 / std::sqrt(std::numbers::pi)));
  CHECK(std::abs(b.l_product.real() - std::numbers::pi / 4) < 1e-8);
  CHECK(&constants_bundle(4, 1e-8) == &b);
  const auto& b7 = constants_bundle(7, 1e-6);
  CHECK(std::abs(b7.l_product.imag()) <= 1e-9);
  CHECK(constants_bundle(2, 1e-6).c_q == 0.5);
}
