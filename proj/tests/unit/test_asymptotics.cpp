#include <doctest.h>

#include <cmath>
#include <numbers>

#include "congaps/asymptotics.hpp"
#include "congaps/constants.hpp"
#include "congaps/error.hpp"
#include "congaps/oracles.hpp"
#include "congaps/primes.hpp"
#include "congaps/report.hpp"

using namespace congaps;

TEST_CASE("Mertens product in a progression") {
  const auto table = sieve_primes(10'000);
  CHECK(mertens_ap_product(3, 5, table) == 1.0);
  CHECK(mertens_ap_product(4, 5, table) == doctest::Approx(1.25));
  double direct = 1.0;
  for (double p : {7, 13, 19, 31, 37, 43, 61, 67, 73, 79, 97}) direct /= 1.0 - 1.0 / p;
  CHECK(mertens_ap_product(3, 100, table) == doctest::Approx(direct).epsilon(1e-12));
  CHECK(direct == doctest::Approx(1.5534).epsilon(1e-4));
}

TEST_CASE("Mertens prediction") {
  const double e = std::numbers::e;
  CHECK(mertens_prediction(1, e, constants_bundle(1, 1e-6)) == doctest::Approx(1.78107).epsilon(1e-5));
  CHECK(mertens_prediction(2, e, constants_bundle(2, 1e-6)) == doctest::Approx(0.89054).epsilon(1e-5));
  const auto& b3 = constants_bundle(3, 1e-6);
  const double expect = std::exp(kEulerGamma / 2) * b3.c_q * std::sqrt(std::log(1e7));
  CHECK(mertens_prediction(3, 1e7, b3) == doctest::Approx(expect));
  CHECK_THROWS_AS(mertens_prediction(3, 1.0, b3), DomainError);
}

TEST_CASE("Mertens ratio improves with X") {
  const auto table = sieve_primes(1'000'000);
  for (u64 q : {3u, 4u, 5u}) {
    const auto& b = constants_bundle(q, 1e-7);
    const double small = std::abs(mertens_ap_product(q, 10'000, table) / mertens_prediction(q, 1e4, b) - 1.0);
    const double large = std::abs(mertens_ap_product(q, 1'000'000, table) / mertens_prediction(q, 1e6, b) - 1.0);
    CHECK(large < small);
    CHECK(large < 0.05);
  }
}

TEST_CASE("restricted integer counts") {
  const auto table = sieve_primes(100'000);
  CHECK(count_restricted(1, 3, 1, table) == 1);
  CHECK(count_restricted(1, 7, 50, table) == 1);
  CHECK(count_restricted(50, 3, 1, table) == 8);
  CHECK(count_restricted(100, 3, 10, table) == 11);
  CHECK(count_restricted(0, 3, 1, table) == 0);
}

TEST_CASE("restricted counts agree with trial factorisation") {
  const auto table = sieve_primes(20'000);
  for (u64 q : {3u, 4u, 5u}) {
    for (double Y : {1.0, 10.0, 50.0}) {
      const auto prefix = oracle::restricted_prefix_counts(20'000, q, Y);
      for (u64 X : {1u, 2u, 77u, 1000u, 4321u, 20'000u}) CHECK(count_restricted(X, q, Y, table) == prefix[X]);
    }
  }
}

TEST_CASE("restricted count prediction tracks the count") {
  const auto table = sieve_primes(1'000'000);
  const auto& b = constants_bundle(3, 1e-7);
  const double pred = lemma33_prediction(1e6, 3, 1, b, table);
  const double n = static_cast<double>(count_restricted(1'000'000, 3, 1, table));
  CHECK(std::abs(n / pred - 1.0) < 0.2);
  CHECK_THROWS_AS(lemma33_prediction(2.0, 3, 1, b, table), DomainError);
}

TEST_CASE("compare") {
  const auto a = compare("x", 1.0, 1.0, 0.05);
  CHECK(a.ratio == 1.0);
  CHECK(a.pass);
  CHECK(compare("x", 0.96, 1.0, 0.05).pass);
  CHECK_FALSE(compare("x", 1.2, 1.0, 0.05).pass);
  CHECK_THROWS_AS(compare("x", 1.0, 0.0, 0.05), DomainError);
  const auto j = to_json(compare("m", 2.0, 1.0, 0.5, {{"q", 3}}));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"label", "actual", "predicted", "ratio", "params", "pass"});
}

TEST_CASE("round-trip double formatting") {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 6.02214076e23, -2.5}) CHECK(std::stod(format_double(v)) == v);
}
