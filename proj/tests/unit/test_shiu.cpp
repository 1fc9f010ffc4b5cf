#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "congaps/arith.hpp"
#include "congaps/error.hpp"
#include "congaps/oracles.hpp"
#include "congaps/primes.hpp"
#include "congaps/shiu.hpp"

using namespace congaps;

TEST_CASE("t(H)") {
  CHECK(t_of_H(1e7) == doctest::Approx(19.4).epsilon(5e-3));
  const double t6 = t_of_H(1e6);
  CHECK(t6 == doctest::Approx(12.6).epsilon(1e-2));
  CHECK(t6 < std::log(1e6));
  CHECK(t_of_H(std::exp(std::numbers::e) * 1.0001) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK_THROWS_AS(t_of_H(15.0), DomainError);
  try {
    t_of_H(10.0);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("e^e") != std::string::npos);
  }
}

TEST_CASE("construction for H = 1e5, q = 3, a = 1") {
  const auto table = sieve_primes(100'000);
  const auto c = build_construction(100'000, 3, 1, 1, table);
  CHECK(c.a_is_one());
  CHECK_FALSE(c.tH.has_value());
  const double L = std::log(1e5);
  std::vector<std::uint32_t> expect;
  for (auto p : table.primes()) {
    const bool one = p % 3 == 1;
    if ((one && p <= L) || (!one && p <= 1e5 / (L * L))) expect.push_back(p);
  }
  CHECK(c.script_p == expect);
  CHECK(std::find(c.script_p.begin(), c.script_p.end(), 7u) != c.script_p.end());
  CHECK(std::find(c.script_p.begin(), c.script_p.end(), 13u) == c.script_p.end());
  CHECK(c.script_p.back() <= 755);
  for (auto p : table.primes()) {
    if (p > 2000) break;
    const bool in = std::binary_search(c.script_p.begin(), c.script_p.end(), p);
    CHECK(in == oracle::in_script_p(p, 100'000, 3, 1));
  }
  double direct = 1.0 - 1.0 / 3.0;
  for (auto p : expect)
    if (p != 3) direct *= 1.0 - 1.0 / p;
  CHECK(phi_over_Q(c) == doctest::Approx(direct).epsilon(1e-12));
  CHECK(direct == doctest::Approx(0.1332).epsilon(1e-3));
}

TEST_CASE("construction preconditions") {
  const auto table = sieve_primes(100'000);
  CHECK_THROWS_AS(build_construction(100'000, 3, 1, 7, table), DomainError);
  CHECK_THROWS_AS(build_construction(100'000, 3, 1, 12, table), DomainError);
  CHECK_NOTHROW(build_construction(100'000, 3, 1, 13, table));
  CHECK_THROWS_AS(build_construction(100'000, 4, 2, 1, table), DomainError);
  CHECK_THROWS_AS(build_construction(100'000, 2, 1, 1, table), DomainError);
  CHECK_THROWS_AS(build_construction(50, 3, 1, 1, table), DomainError);
  CHECK_THROWS_AS(build_construction(200'000, 3, 1, 1, table), OutOfRangeError);
  const auto c = build_construction(100'000, 3, 2, 1, table);
  REQUIRE(c.tH.has_value());
  CHECK(*c.tH == doctest::Approx(t_of_H(1e5)));
}

TEST_CASE("phi(Q)/Q on hand-built prime sets") {
  ShiuConstruction c;
  c.modulus_primes = {2};
  CHECK(phi_over_Q(c) == doctest::Approx(0.5));
  c.modulus_primes = {2, 3};
  CHECK(phi_over_Q(c) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("S and T partition the units mod Q below H") {
  const u64 H = 30'000;
  const auto table = sieve_primes(H);
  const auto spf = build_spf(H);
  for (u64 q : {3u, 4u, 5u}) {
    for (u64 a : {u64{1}, q - 1}) {
      const auto c = build_construction(H, q, a, 1, table);
      const auto sets = compute_S_T(c, spf, {.keep_members = true, .threads = 2});
      const auto oracle = oracle::residue_split(H, q, a, c.modulus_primes);
      CHECK(sets.S_count == oracle.s);
      CHECK(sets.T_count == oracle.t);
      REQUIRE(sets.S_members.has_value());
      CHECK(*sets.S_members == oracle.s_members);
      CHECK(*sets.T_members == oracle.t_members);
      for (u64 h : *sets.S_members) {
        CHECK(h <= H);
        CHECK(h % 2 != 0);
        CHECK(h % q == a % q);
      }
      const bool disjoint = std::none_of(sets.T_members->begin(), sets.T_members->end(), [&](u64 h) {
        return std::binary_search(sets.S_members->begin(), sets.S_members->end(), h);
      });
      CHECK(disjoint);
    }
  }
}

TEST_CASE("thread count does not change the sets") {
  const u64 H = 50'000;
  const auto table = sieve_primes(H);
  const auto spf = build_spf(H);
  const auto c = build_construction(H, 4, 3, 1, table);
  const auto one = compute_S_T(c, spf, {.keep_members = true, .threads = 1});
  const auto many = compute_S_T(c, spf, {.keep_members = true, .threads = 4});
  CHECK(one.S_count == many.S_count);
  CHECK(*one.T_members == *many.T_members);
}

TEST_CASE("reports") {
  CHECK(lemma34_case_b_constant() == doctest::Approx(0.42).epsilon(5e-3));
  CHECK(lemma34_case_b_constant() > 0.4);
  const u64 H = 100'000;
  const auto table = sieve_primes(H);
  const auto spf = build_spf(H);
  const auto c = build_construction(H, 3, 1, 1, table);
  const auto sets = compute_S_T(c, spf);
  const auto t = t_bound_report(c, sets);
  CHECK(std::isfinite(t.ratio));
  CHECK(t.ratio > 0.0);
  const auto l = lemma34_check(c, sets);
  CHECK(l.actual == static_cast<double>(sets.S_count - sets.T_count));
  const auto j = shiu_report_json(c, sets);
  CHECK(j["tH"].is_null());
  CHECK(j["P_size"] == c.script_p.size());
}
