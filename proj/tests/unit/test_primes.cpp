#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "congaps/error.hpp"
#include "congaps/oracles.hpp"
#include "congaps/primes.hpp"

using namespace congaps;

namespace {

std::filesystem::path scratch_dir(const char* name) {
  auto dir = std::filesystem::temp_directory_path() / ("congaps_test_" + std::to_string(::getpid()) + "_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("small sieves") {
  const auto t10 = sieve_primes(10);
  CHECK(std::vector<std::uint32_t>(t10.primes().begin(), t10.primes().end()) == std::vector<std::uint32_t>{2, 3, 5, 7});
  CHECK(sieve_primes(1).size() == 0);
  CHECK(sieve_primes(0).size() == 0);
  CHECK(sieve_primes(2).size() == 1);
}

TEST_CASE("pi(10^6) agrees with trial division") {
  const auto table = sieve_primes(1'000'000);
  const auto oracle = oracle::trial_division_primes(1'000'000);
  REQUIRE(table.size() == 78498);
  REQUIRE(oracle.size() == table.size());
  for (std::size_t i = 0; i < oracle.size(); ++i) REQUIRE(table[i] == oracle[i]);
}

TEST_CASE("segment boundaries do not change the result") {
  const auto ref = sieve_primes(200'000);
  for (u64 seg : {64u, 1000u, 4096u, 65536u}) {
    const auto t = sieve_primes(200'000, {.segment_size = seg});
    REQUIRE(t.size() == ref.size());
    CHECK(std::equal(t.primes().begin(), t.primes().end(), ref.primes().begin()));
  }
}

TEST_CASE("capacity limit") {
  CHECK_THROWS_AS(sieve_primes(1000, {.max_limit = 999}), CapacityError);
}

TEST_CASE("prime_count_ap") {
  const auto table = sieve_primes(1000);
  CHECK(prime_count_ap(table, 100, 3, 1) == 11);
  CHECK(prime_count_ap(table, 2, 3, 1) == 0);
  CHECK(prime_count_ap(table, 10, 4, 1) == 1);
  CHECK(prime_count_ap(table, 1000, 4, 3) + prime_count_ap(table, 1000, 4, 1) + 1 == table.size());
  CHECK_THROWS_AS(prime_count_ap(table, 1001, 3, 1), OutOfRangeError);
}

TEST_CASE("residue classes equidistribute") {
  // Each coprime class mod q holds ~ pi(X)/phi(q) primes.
  const auto table = sieve_primes(2'000'000);
  for (u64 q : {3u, 4u, 5u, 7u, 12u}) {
    const double share = static_cast<double>(table.size()) / static_cast<double>(euler_phi(q));
    for (u64 a = 1; a < q; ++a) {
      if (gcd(a, q) != 1) continue;
      const double n = static_cast<double>(prime_count_ap(table, 2'000'000, q, a));
      CHECK(std::abs(n / share - 1.0) < 0.01);
    }
  }
}

TEST_CASE("smallest prime factor table") {
  const auto spf = build_spf(12);
  CHECK(spf[12] == 2);
  const auto big = build_spf(10'000);
  CHECK(big[49] == 7);
  CHECK(big[9991] == 97);
  CHECK(big.distinct_factors(360) == std::vector<std::uint32_t>{2, 3, 5});
  CHECK(big.distinct_factors(1).empty());
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const u64 n = 2 + rng() % 9999;
    const auto f = big.distinct_factors(n);
    const auto g = distinct_prime_factors(n);
    REQUIRE(std::vector<u64>(f.begin(), f.end()) == g);
  }
}

TEST_CASE("prime cache round trip") {
  const auto dir = scratch_dir("cache");
  const auto table = sieve_primes(50'000);
  const auto path = prime_cache_file(dir, 50'000);
  save_prime_cache(path, table);
  const auto back = load_prime_cache(path, 50'000);
  REQUIRE(back.size() == table.size());
  CHECK(std::equal(back.primes().begin(), back.primes().end(), table.primes().begin()));

  SUBCASE("limit mismatch") { CHECK_THROWS_AS(load_prime_cache(path, 40'000), IoError); }
  SUBCASE("truncation") {
    std::filesystem::resize_file(path, std::filesystem::file_size(path) - 3);
    CHECK_THROWS_AS(load_prime_cache(path, 50'000), IoError);
  }
  SUBCASE("bad magic") {
    std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
    f.write("XXXX", 4);
    f.close();
    CHECK_THROWS_AS(load_prime_cache(path, 50'000), IoError);
  }
  SUBCASE("cached_sieve writes then reuses") {
    const auto fresh = scratch_dir("cache2");
    const auto a = cached_sieve(30'000, fresh);
    CHECK(std::filesystem::exists(prime_cache_file(fresh, 30'000)));
    const auto b = cached_sieve(30'000, fresh);
    CHECK(a.size() == b.size());
    std::filesystem::remove_all(fresh);
  }
  std::filesystem::remove_all(dir);
}
