#include "congaps/characters.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <string>

#include "congaps/error.hpp"

namespace congaps {

namespace {

i64 mod_inverse(i64 a, i64 m) {
  i64 old_r = a % m, r = m, old_s = 1, s = 0;
  if (old_r < 0) old_r += m;
  while (r != 0) {
    const i64 quot = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - quot * r};
    std::tie(old_s, s) = std::pair{s, old_s - quot * s};
  }
  if (old_r != 1) throw DomainError("mod_inverse: not invertible");
  old_s %= m;
  return old_s < 0 ? old_s + m : old_s;
}

u64 smallest_primitive_root(u64 m) {
  const u64 phi = euler_phi(m);
  for (u64 g = 2; g < m; ++g)
    if (gcd(g, m) == 1 && multiplicative_order(g, m) == phi) return g;
  throw DomainError("no primitive root modulo " + std::to_string(m));
}

// One cyclic factor of (Z/p^eZ)^*: its generator residue mod p^e and order.
struct LocalGen {
  u64 residue;
  u64 order;
};

struct LocalComponent {
  u64 modulus;
  std::vector<LocalGen> gens;
  // local_logs[x * gens.size() + j] for units x mod modulus.
  std::vector<std::uint32_t> local_logs;
};

LocalComponent make_component(u64 p, unsigned e) {
  LocalComponent c;
  c.modulus = 1;
  for (unsigned i = 0; i < e; ++i) c.modulus *= p;
  const u64 m = c.modulus;
  if (p == 2 && e == 1) return c;
  if (p == 2) {
    c.gens.push_back({m - 1, 2});
    if (e >= 3) c.gens.push_back({5, m / 4});
  } else {
    c.gens.push_back({smallest_primitive_root(m), euler_phi(m)});
  }
  const std::size_t k = c.gens.size();
  c.local_logs.assign(m * k, 0);
  if (k == 1) {
    u64 x = 1;
    for (u64 i = 0; i < c.gens[0].order; ++i) {
      c.local_logs[x] = static_cast<std::uint32_t>(i);
      x = mulmod(x, c.gens[0].residue, m);
    }
  } else {
    // (Z/2^eZ)^* = <-1> x <5>
    u64 x = 1;
    for (u64 b = 0; b < c.gens[1].order; ++b) {
      c.local_logs[x * 2 + 0] = 0;
      c.local_logs[x * 2 + 1] = static_cast<std::uint32_t>(b);
      const u64 neg = m - x;
      c.local_logs[neg * 2 + 0] = 1;
      c.local_logs[neg * 2 + 1] = static_cast<std::uint32_t>(b);
      x = mulmod(x, 5, m);
    }
  }
  return c;
}

}  // namespace

Turn Turn::make(u64 num, u64 den) {
  if (den == 0) throw DomainError("Turn: zero denominator");
  num %= den;
  const u64 g = std::gcd(num, den);
  if (num == 0) return Turn{0, 1, false};
  return Turn{static_cast<std::uint32_t>(num / g), static_cast<std::uint32_t>(den / g), false};
}

std::complex<double> Turn::to_complex() const {
  if (zero) return {0.0, 0.0};
  if (num == 0) return {1.0, 0.0};
  if (den == 2) return {-1.0, 0.0};
  if (den == 4) return num == 1 ? std::complex<double>{0.0, 1.0} : std::complex<double>{0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

Turn operator*(Turn a, Turn b) {
  if (a.zero || b.zero) return Turn::zero_value();
  const u64 den = u64{a.den} * b.den;
  return Turn::make(u64{a.num} * b.den + u64{b.num} * a.den, den);
}

UnitGroup::UnitGroup(u64 q) : q_(q), phi_(euler_phi(q)), exponent_(1) {
  if (q < 1 || q > kMaxCharacterModulus)
    throw DomainError("character modulus must lie in [1, " + std::to_string(kMaxCharacterModulus) +
                      "], got " + std::to_string(q));
  std::vector<LocalComponent> comps;
  for (const auto& [p, e] : factorize(q)) comps.push_back(make_component(p, e));

  for (const auto& c : comps) {
    const u64 cofactor = q / c.modulus;
    for (const auto& g : c.gens) {
      // CRT lift: g mod c.modulus, 1 mod the cofactor.
      u64 lifted = g.residue % q;
      if (cofactor > 1) {
        const i64 t = static_cast<i64>(mulmod((g.residue + c.modulus - 1) % c.modulus,
                                              static_cast<u64>(mod_inverse(static_cast<i64>(cofactor % c.modulus),
                                                                           static_cast<i64>(c.modulus))),
                                              c.modulus));
        lifted = 1 + cofactor * static_cast<u64>(t);
      }
      generators_.push_back(lifted % q);
      orders_.push_back(g.order);
      exponent_ = std::lcm(exponent_, g.order);
    }
  }
  ngens_ = generators_.size();

  unit_.assign(q, 0);
  logs_.assign(q * ngens_, 0);
  for (u64 r = 0; r < q; ++r) {
    if (gcd(r, q) != 1) continue;
    unit_[r] = 1;
    std::size_t j = 0;
    for (const auto& c : comps) {
      const u64 x = r % c.modulus;
      for (std::size_t i = 0; i < c.gens.size(); ++i, ++j)
        logs_[r * ngens_ + j] = c.local_logs[x * c.gens.size() + i];
    }
  }
}

u64 UnitGroup::log(u64 r, std::size_t j) const { return logs_[(r % q_) * ngens_ + j]; }

Character::Character(std::shared_ptr<const UnitGroup> group, std::vector<u64> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  if (exponents_.size() != group_->generators().size())
    throw DomainError("Character: exponent vector does not match the group rank");
  for (std::size_t j = 0; j < exponents_.size(); ++j) exponents_[j] %= group_->cyclic_orders()[j];
}

bool Character::is_principal() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](u64 k) { return k == 0; });
}

u64 Character::order() const {
  u64 ord = 1;
  const auto& n = group_->cyclic_orders();
  for (std::size_t j = 0; j < exponents_.size(); ++j) ord = std::lcm(ord, n[j] / std::gcd(exponents_[j], n[j]));
  return ord;
}

Turn Character::value(u64 n) const {
  const u64 q = group_->modulus();
  const u64 r = n % q;
  if (!group_->is_unit(r)) return Turn::zero_value();
  const u64 big = group_->exponent();
  const auto& ord = group_->cyclic_orders();
  u64 acc = 0;
  for (std::size_t j = 0; j < exponents_.size(); ++j) {
    const u64 step = big / ord[j];
    acc = (acc + mulmod(exponents_[j] * step % big, group_->log(r, j), big)) % big;
  }
  return Turn::make(acc, big);
}

std::vector<Turn> Character::values() const {
  std::vector<Turn> out;
  out.reserve(modulus());
  for (u64 r = 0; r < modulus(); ++r) out.push_back(value(r));
  return out;
}

Character Character::operator*(const Character& other) const {
  if (other.modulus() != modulus()) throw DomainError("character product across different moduli");
  std::vector<u64> k(exponents_.size());
  for (std::size_t j = 0; j < k.size(); ++j) k[j] = exponents_[j] + other.exponents_[j];
  return Character(group_, std::move(k));
}

Character Character::conjugate() const {
  std::vector<u64> k(exponents_.size());
  const auto& n = group_->cyclic_orders();
  for (std::size_t j = 0; j < k.size(); ++j) k[j] = (n[j] - exponents_[j]) % n[j];
  return Character(group_, std::move(k));
}

CharacterTable::CharacterTable(u64 q) : group_(std::make_shared<const UnitGroup>(q)) {
  const auto& n = group_->cyclic_orders();
  chars_.reserve(group_->order());
  // Mixed-radix decoding of the index, first generator most significant, gives
  // lexicographic order with the principal character first.
  for (u64 idx = 0; idx < group_->order(); ++idx) {
    std::vector<u64> k(n.size(), 0);
    u64 rest = idx;
    for (std::size_t j = n.size(); j-- > 0;) {
      k[j] = rest % n[j];
      rest /= n[j];
    }
    chars_.emplace_back(group_, std::move(k));
  }
}

std::size_t CharacterTable::index_of(const Character& chi) const {
  if (chi.modulus() != modulus()) throw DomainError("index_of: modulus mismatch");
  const auto& n = group_->cyclic_orders();
  std::size_t idx = 0;
  for (std::size_t j = 0; j < n.size(); ++j) idx = idx * n[j] + chi.exponents()[j];
  return idx;
}

CharacterTable build_character_table(u64 q) { return CharacterTable(q); }

std::complex<double> evaluate(const Character& chi, u64 n) { return chi.value(n).to_complex(); }

namespace {

using Poly = std::vector<std::int64_t>;

// In-place multiply by (x^d - 1).
void mul_binomial(Poly& p, u64 d) {
  Poly out(p.size() + d, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + d] += p[i];
    out[i] -= p[i];
  }
  p = std::move(out);
}

// Exact division by (x^d - 1).
void div_binomial(Poly& p, u64 d) {
  const std::size_t n = p.size();
  Poly quot(n - d, 0);
  Poly rem = p;
  for (std::size_t i = n; i-- > d;) {
    const std::int64_t c = rem[i];
    quot[i - d] = c;
    rem[i] -= c;
    rem[i - d] += c;
  }
  p = std::move(quot);
}

int moebius(u64 n) {
  int mu = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

Poly cyclotomic(u64 m) {
  Poly p{1};
  std::vector<u64> divs;
  for (u64 d = 1; d <= m; ++d)
    if (m % d == 0) divs.push_back(d);
  for (u64 d : divs)
    if (moebius(m / d) == 1) mul_binomial(p, d);
  for (u64 d : divs)
    if (moebius(m / d) == -1) div_binomial(p, d);
  return p;
}

constexpr u64 kMaxExactExponent = u64{1} << 14;

}  // namespace

CyclotomicInteger reduce_cyclotomic(const std::vector<std::int64_t>& counts) {
  const u64 m = counts.size();
  if (m == 0) throw DomainError("reduce_cyclotomic: empty coefficient vector");
  if (m > kMaxExactExponent) throw DomainError("exact cyclotomic reduction limited to order " +
                                               std::to_string(kMaxExactExponent));
  const Poly phi = cyclotomic(m);
  const std::size_t deg = phi.size() - 1;
  Poly rem = counts;
  for (std::size_t i = rem.size(); i-- > deg;) {
    const std::int64_t c = rem[i];
    if (c == 0) continue;
    for (std::size_t k = 0; k <= deg; ++k) rem[i - deg + k] -= c * phi[k];
  }
  rem.resize(std::max<std::size_t>(deg, 1));
  return CyclotomicInteger{m, std::move(rem)};
}

std::optional<std::int64_t> CyclotomicInteger::as_integer() const {
  for (std::size_t i = 1; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) return std::nullopt;
  return coeffs.empty() ? 0 : coeffs[0];
}

CyclotomicInteger orthogonality_sum_exact(const CharacterTable& table, u64 n) {
  const u64 big = table.group().exponent();
  std::vector<std::int64_t> counts(big, 0);
  for (const auto& chi : table.characters()) {
    const Turn t = chi.value(n);
    if (t.zero) continue;
    counts[u64{t.num} * (big / t.den)] += 1;
  }
  return reduce_cyclotomic(counts);
}

std::complex<double> orthogonality_sum(const CharacterTable& table, u64 n) {
  if (table.group().exponent() <= kMaxExactExponent) {
    const auto exact = orthogonality_sum_exact(table, n);
    if (auto v = exact.as_integer()) return {static_cast<double>(*v), 0.0};
    // Non-integer exact values cannot occur for this sum; fall through to the float path.
  }
  std::complex<double> acc{0.0, 0.0};
  for (const auto& chi : table.characters()) acc += evaluate(chi, n);
  return acc;
}

}  // namespace congaps
