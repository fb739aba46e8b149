#pragma once

#include <iosfwd>

#include "supercong/modulus.hpp"

namespace supercong {

/// An integer class modulo p^k. Operands of a binary operation must share p and k.
class Residue {
 public:
  Residue(i64 value, const PrimePowerModulus& m);
  static Residue from_unsigned(u64 value, const PrimePowerModulus& m);

  u64 value() const { return value_; }
  const PrimePowerModulus& modulus() const { return mod_; }

  bool is_unit() const { return value_ % mod_.prime() != 0; }

  Residue operator-() const;
  Residue& operator+=(const Residue& o);
  Residue& operator-=(const Residue& o);
  Residue& operator*=(const Residue& o);
  Residue pow(u64 e) const;

  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }

  /// Equal as classes; compares p and k as well as the value.
  friend bool operator==(const Residue& a, const Residue& b);

 private:
  Residue(u64 value, const PrimePowerModulus& m, int) : value_(value), mod_(m) {}
  void require_same(const Residue& o) const;

  u64 value_;
  PrimePowerModulus mod_;
};

/// w with u * w = 1 (mod p^k); NotAUnit when p divides u.
Residue mod_inverse(const Residue& u);

std::ostream& operator<<(std::ostream& os, const Residue& r);

}  // namespace supercong
