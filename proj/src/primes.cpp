#include "congaps/primes.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <map>
#include <mutex>
#include <string>

#include "congaps/error.hpp"

namespace congaps {

namespace {

constexpr std::array<char, 8> kCacheMagic = {'P', 'R', 'I', 'M', 'T', 'B', 'L', '1'};

u64 isqrt(u64 n) {
  auto r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Plain sieve for the base primes; only ever called with n <= 2^16.
std::vector<std::uint32_t> small_primes(u64 n) {
  std::vector<std::uint32_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (u64 i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (u64 j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

void check_limit(u64 limit, const SieveOptions& opts) {
  if (limit > opts.max_limit)
    throw CapacityError("sieve limit " + std::to_string(limit) +
                        " exceeds configured maximum " + std::to_string(opts.max_limit));
  if (opts.segment_size < 2) throw DomainError("segment size must be at least 2");
}

void write_u64_le(std::ostream& os, u64 v) {
  std::array<unsigned char, 8> b{};
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  os.write(reinterpret_cast<const char*>(b.data()), 8);
}

bool read_u64_le(std::istream& is, u64& v) {
  std::array<unsigned char, 8> b{};
  if (!is.read(reinterpret_cast<char*>(b.data()), 8)) return false;
  v = 0;
  for (int i = 0; i < 8; ++i) v |= u64{b[i]} << (8 * i);
  return true;
}

}  // namespace

struct PrimeTable::ResidueIndex {
  std::mutex mu;
  std::map<u64, std::shared_ptr<const std::vector<std::vector<std::uint32_t>>>> by_modulus;
};

PrimeTable::PrimeTable(u64 limit, std::vector<std::uint32_t> primes)
    : limit_(limit), primes_(std::move(primes)), index_(std::make_shared<ResidueIndex>()) {}

u64 PrimeTable::count_upto(u64 t) const {
  if (t > limit_)
    throw OutOfRangeError("t = " + std::to_string(t) + " exceeds table limit " +
                          std::to_string(limit_));
  return static_cast<u64>(std::upper_bound(primes_.begin(), primes_.end(), t) - primes_.begin());
}

bool PrimeTable::contains(u64 n) const {
  return n <= 0xFFFFFFFFull &&
         std::binary_search(primes_.begin(), primes_.end(), static_cast<std::uint32_t>(n));
}

std::span<const std::uint32_t> PrimeTable::residue_class(u64 q, u64 a) const {
  if (q == 0 || a >= q) throw DomainError("residue_class: need q >= 1 and 0 <= a < q");
  std::shared_ptr<const std::vector<std::vector<std::uint32_t>>> classes;
  {
    std::lock_guard lock(index_->mu);
    auto it = index_->by_modulus.find(q);
    if (it != index_->by_modulus.end()) classes = it->second;
  }
  if (!classes) {
    auto built = std::make_shared<std::vector<std::vector<std::uint32_t>>>(q);
    for (std::uint32_t p : primes_) (*built)[p % q].push_back(p);
    std::lock_guard lock(index_->mu);
    classes = index_->by_modulus.try_emplace(q, std::move(built)).first->second;
  }
  return (*classes)[a];
}

std::vector<std::uint32_t> SpfTable::distinct_factors(u64 n) const {
  if (n == 0 || n > limit_) throw OutOfRangeError("SpfTable: n outside [1, limit]");
  std::vector<std::uint32_t> out;
  while (n > 1) {
    std::uint32_t p = spf_[n];
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  return out;
}

void for_each_prime(u64 lo, u64 hi,
                    const std::function<void(std::span<const std::uint32_t>)>& sink,
                    const SieveOptions& opts) {
  check_limit(hi, opts);
  if (hi < 2 || lo > hi) return;
  lo = std::max<u64>(lo, 2);

  std::vector<std::uint32_t> batch;
  if (lo == 2) {
    batch.push_back(2);
    sink(batch);
    batch.clear();
    lo = 3;
  }
  if (lo > hi) return;

  const auto base = small_primes(isqrt(hi));
  // Odd-only: bit i of a segment starting at odd `start` stands for start + 2i.
  const u64 span_per_segment = 2 * opts.segment_size;
  std::vector<std::uint8_t> composite(opts.segment_size);
  u64 start = lo | 1;
  while (start <= hi) {
    const u64 end = std::min(hi, start + span_per_segment - 1);  // inclusive
    const u64 count = (end - start) / 2 + 1;
    std::fill(composite.begin(), composite.begin() + static_cast<std::ptrdiff_t>(count), 0);
    for (std::size_t k = 1; k < base.size(); ++k) {
      const u64 p = base[k];
      if (p * p > end) break;
      u64 first = std::max(p * p, (start + p - 1) / p * p);
      if (first % 2 == 0) first += p;
      for (u64 m = first; m <= end; m += 2 * p) composite[(m - start) / 2] = 1;
    }
    batch.clear();
    for (u64 i = 0; i < count; ++i) {
      const u64 n = start + 2 * i;
      if (!composite[i] && n > 1) batch.push_back(static_cast<std::uint32_t>(n));
    }
    if (!batch.empty()) sink(batch);
    if (end == hi) break;
    start += span_per_segment;
  }
}

PrimeTable sieve_primes(u64 limit, const SieveOptions& opts) {
  check_limit(limit, opts);
  std::vector<std::uint32_t> primes;
  if (limit >= 2) {
    const double l = static_cast<double>(limit);
    primes.reserve(static_cast<std::size_t>(1.26 * l / std::log(std::max(l, 3.0))) + 16);
  }
  for_each_prime(
      2, limit, [&](std::span<const std::uint32_t> seg) { primes.insert(primes.end(), seg.begin(), seg.end()); },
      opts);
  return PrimeTable(limit, std::move(primes));
}

u64 prime_count_ap(const PrimeTable& table, u64 t, u64 q, u64 a) {
  if (t > table.limit())
    throw OutOfRangeError("prime_count_ap: t = " + std::to_string(t) + " exceeds table limit " +
                          std::to_string(table.limit()));
  if (q == 0 || a >= q) throw DomainError("prime_count_ap: need q >= 1 and 0 <= a < q");
  auto cls = table.residue_class(q, a);
  return static_cast<u64>(std::upper_bound(cls.begin(), cls.end(), t) - cls.begin());
}

SpfTable build_spf(u64 limit, const SieveOptions& opts) {
  if (limit < 1) throw DomainError("build_spf: limit must be >= 1");
  check_limit(limit, opts);
  std::vector<std::uint32_t> spf(limit + 1, 0);
  spf[1] = 1;
  std::vector<std::uint32_t> primes;
  // Linear sieve: each composite is struck exactly once by its least factor.
  for (u64 i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      if (p > spf[i] || i * p > limit) break;
      spf[i * p] = p;
    }
  }
  return SpfTable(limit, std::move(spf));
}

void save_prime_cache(const std::filesystem::path& path, const PrimeTable& table) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open prime cache for writing: " + path.string());
  os.write(kCacheMagic.data(), kCacheMagic.size());
  write_u64_le(os, table.limit());
  for (std::uint32_t p : table.primes()) write_u64_le(os, p);
  if (!os) throw IoError("write failed: " + path.string());
}

PrimeTable load_prime_cache(const std::filesystem::path& path, u64 expected_limit) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open prime cache: " + path.string());
  std::array<char, 8> magic{};
  u64 limit = 0;
  if (!is.read(magic.data(), magic.size()) || magic != kCacheMagic || !read_u64_le(is, limit))
    throw IoError("bad prime cache header: " + path.string());
  if (limit != expected_limit)
    throw IoError("prime cache limit mismatch: file has " + std::to_string(limit) +
                  ", expected " + std::to_string(expected_limit));
  std::vector<std::uint32_t> primes;
  u64 p = 0;
  u64 prev = 0;
  while (read_u64_le(is, p)) {
    if (p <= prev || p > limit) throw IoError("corrupt prime cache body: " + path.string());
    primes.push_back(static_cast<std::uint32_t>(p));
    prev = p;
  }
  if (!is.eof() || is.gcount() != 0) throw IoError("truncated prime cache: " + path.string());
  return PrimeTable(limit, std::move(primes));
}

std::filesystem::path prime_cache_file(const std::filesystem::path& dir, u64 limit) {
  return dir / ("primes_" + std::to_string(limit) + ".bin");
}

PrimeTable cached_sieve(u64 limit, const std::filesystem::path& cache_dir, const SieveOptions& opts) {
  std::filesystem::path dir = cache_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("CONGAPS_CACHE_DIR"); env && *env) dir = env;
  }
  if (dir.empty()) return sieve_primes(limit, opts);
  const auto file = prime_cache_file(dir, limit);
  if (std::filesystem::exists(file)) return load_prime_cache(file, limit);
  auto table = sieve_primes(limit, opts);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create cache directory " + dir.string() + ": " + ec.message());
  save_prime_cache(file, table);
  return table;
}

}  // namespace congaps
