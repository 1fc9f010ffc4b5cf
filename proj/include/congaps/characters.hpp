#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "congaps/arith.hpp"

namespace congaps {

// A root of unity e^{2 pi i num/den}, reduced, 0 <= num < den; or exactly zero.
struct Turn {
  std::uint32_t num = 0;
  std::uint32_t den = 1;
  bool zero = false;

  static Turn make(u64 num, u64 den);
  static Turn zero_value() { return Turn{0, 1, true}; }

  std::complex<double> to_complex() const;
  friend Turn operator*(Turn a, Turn b);  // turn addition mod 1
  friend bool operator==(const Turn&, const Turn&) = default;
};

// Structure of (Z/qZ)^* as a product of cyclic factors with fixed generators,
// plus a discrete-log table for every residue.
class UnitGroup {
 public:
  explicit UnitGroup(u64 q);

  u64 modulus() const { return q_; }
  u64 order() const { return phi_; }
  // Lcm of the cyclic orders; every character value has denominator | exponent().
  u64 exponent() const { return exponent_; }
  const std::vector<u64>& generators() const { return generators_; }
  const std::vector<u64>& cyclic_orders() const { return orders_; }

  bool is_unit(u64 r) const { return unit_[r % q_] != 0; }
  // Exponent of generator j in residue r (r a unit).
  u64 log(u64 r, std::size_t j) const;

 private:
  u64 q_;
  u64 phi_;
  u64 exponent_;
  std::vector<u64> generators_;  // as residues mod q (CRT-lifted)
  std::vector<u64> orders_;
  std::vector<std::uint8_t> unit_;
  // Flattened: logs_[r * ngens + j]; meaningful only for units.
  std::vector<std::uint32_t> logs_;
  std::size_t ngens_ = 0;
};

class Character {
 public:
  Character(std::shared_ptr<const UnitGroup> group, std::vector<u64> exponents);

  u64 modulus() const { return group_->modulus(); }
  const std::vector<u64>& exponents() const { return exponents_; }
  bool is_principal() const;
  u64 order() const;  // order of the character in the dual group
  bool is_real() const { return order() <= 2; }

  Turn value(u64 n) const;
  std::vector<Turn> values() const;  // residues 0..q-1

  Character operator*(const Character& other) const;
  Character conjugate() const;

  friend bool operator==(const Character& a, const Character& b) {
    return a.modulus() == b.modulus() && a.exponents_ == b.exponents_;
  }

 private:
  std::shared_ptr<const UnitGroup> group_;
  std::vector<u64> exponents_;
};

class CharacterTable {
 public:
  explicit CharacterTable(u64 q);

  u64 modulus() const { return group_->modulus(); }
  u64 phi() const { return group_->order(); }
  const UnitGroup& group() const { return *group_; }
  const std::vector<Character>& characters() const { return chars_; }
  const Character& principal() const { return chars_.front(); }

  // Position of a character of this modulus in characters().
  std::size_t index_of(const Character& chi) const;

 private:
  std::shared_ptr<const UnitGroup> group_;
  std::vector<Character> chars_;
};

inline constexpr u64 kMaxCharacterModulus = 1'000'000;

CharacterTable build_character_table(u64 q);

std::complex<double> evaluate(const Character& chi, u64 n);

// Element of Z[zeta_m] as coefficients in the power basis reduced modulo
// the m-th cyclotomic polynomial.
struct CyclotomicInteger {
  u64 m = 1;
  std::vector<std::int64_t> coeffs;

  // Set when the element is a rational integer.
  std::optional<std::int64_t> as_integer() const;
};

// Sum over all characters of chi(n), exact.
CyclotomicInteger orthogonality_sum_exact(const CharacterTable& table, u64 n);
std::complex<double> orthogonality_sum(const CharacterTable& table, u64 n);

// Reduces sum_k counts[k] * zeta_m^k modulo Phi_m.
CyclotomicInteger reduce_cyclotomic(const std::vector<std::int64_t>& counts);

}  // namespace congaps
