#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "congaps/arith.hpp"

namespace congaps {

inline constexpr u64 kDefaultSegmentSize = u64{1} << 20;
inline constexpr u64 kDefaultMaxLimit = u64{1} << 32;

struct SieveOptions {
  u64 segment_size = kDefaultSegmentSize;
  u64 max_limit = kDefaultMaxLimit;
};

// All primes up to `limit`, ascending, stored as 32-bit values (limit never
// exceeds 2^32). Residue-class subsequences are built on first request and
// shared between copies.
class PrimeTable {
 public:
  PrimeTable(u64 limit, std::vector<std::uint32_t> primes);

  u64 limit() const { return limit_; }
  std::span<const std::uint32_t> primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  std::uint32_t operator[](std::size_t i) const { return primes_[i]; }

  // Number of primes <= t (t <= limit).
  u64 count_upto(u64 t) const;
  bool contains(u64 n) const;

  // Primes congruent to a mod q, ascending. Requires q >= 1, a < q.
  std::span<const std::uint32_t> residue_class(u64 q, u64 a) const;

 private:
  struct ResidueIndex;

  u64 limit_;
  std::vector<std::uint32_t> primes_;
  std::shared_ptr<ResidueIndex> index_;
};

// smallest_factor(n) for 1 <= n <= limit; entry 1 holds 1.
class SpfTable {
 public:
  explicit SpfTable(u64 limit, std::vector<std::uint32_t> spf)
      : limit_(limit), spf_(std::move(spf)) {}

  u64 limit() const { return limit_; }
  std::uint32_t operator[](u64 n) const { return spf_[n]; }

  // Distinct prime factors of n (n <= limit), ascending.
  std::vector<std::uint32_t> distinct_factors(u64 n) const;

 private:
  u64 limit_;
  std::vector<std::uint32_t> spf_;
};

PrimeTable sieve_primes(u64 limit, const SieveOptions& opts = {});

// Streams the primes in [lo, hi] in ascending order, one segment at a time.
// Memory is O(segment_size + pi(sqrt(hi))).
void for_each_prime(u64 lo, u64 hi,
                    const std::function<void(std::span<const std::uint32_t>)>& sink,
                    const SieveOptions& opts = {});

// |{p <= t : p = a mod q}|.
u64 prime_count_ap(const PrimeTable& table, u64 t, u64 q, u64 a);

SpfTable build_spf(u64 limit, const SieveOptions& opts = {});

// Binary prime cache: "PRIMTBL1", u64 LE limit, then u64 LE primes.
void save_prime_cache(const std::filesystem::path& path, const PrimeTable& table);
PrimeTable load_prime_cache(const std::filesystem::path& path, u64 expected_limit);

// Sieve through the cache directory named by CONGAPS_CACHE_DIR (or
// `cache_dir` when non-empty). Without a directory this is sieve_primes.
PrimeTable cached_sieve(u64 limit, const std::filesystem::path& cache_dir = {},
                        const SieveOptions& opts = {});

std::filesystem::path prime_cache_file(const std::filesystem::path& dir, u64 limit);

}  // namespace congaps
