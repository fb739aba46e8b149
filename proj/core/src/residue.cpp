#include "supercong/residue.hpp"

#include <ostream>
#include <string>

#include "supercong/errors.hpp"

namespace supercong {

Residue::Residue(i64 value, const PrimePowerModulus& m) : value_(0), mod_(m) {
  const i64 mod = static_cast<i64>(m.modulus());
  i64 r = value % mod;
  if (r < 0) r += mod;
  value_ = static_cast<u64>(r);
}

Residue Residue::from_unsigned(u64 value, const PrimePowerModulus& m) {
  return Residue(value % m.modulus(), m, 0);
}

void Residue::require_same(const Residue& o) const {
  if (mod_.prime() != o.mod_.prime() || mod_.exponent() != o.mod_.exponent()) {
    throw ModulusMismatch("Residue: mixing moduli " + std::to_string(mod_.modulus()) + " and " +
                          std::to_string(o.mod_.modulus()));
  }
}

Residue Residue::operator-() const {
  return Residue(value_ == 0 ? 0 : mod_.modulus() - value_, mod_, 0);
}

Residue& Residue::operator+=(const Residue& o) {
  require_same(o);
  const u64 m = mod_.modulus();
  value_ += o.value_;
  if (value_ >= m) value_ -= m;
  return *this;
}

Residue& Residue::operator-=(const Residue& o) {
  require_same(o);
  value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + mod_.modulus() - o.value_;
  return *this;
}

Residue& Residue::operator*=(const Residue& o) {
  require_same(o);
  value_ = mul_mod(value_, o.value_, mod_.modulus());
  return *this;
}

Residue Residue::pow(u64 e) const { return Residue(pow_mod(value_, e, mod_.modulus()), mod_, 0); }

bool operator==(const Residue& a, const Residue& b) {
  return a.value_ == b.value_ && a.mod_.prime() == b.mod_.prime() && a.mod_.exponent() == b.mod_.exponent();
}

Residue mod_inverse(const Residue& u) {
  if (!u.is_unit()) {
    throw NotAUnit("mod_inverse: " + std::to_string(u.value()) + " is divisible by p = " +
                   std::to_string(u.modulus().prime()));
  }
  return Residue::from_unsigned(inverse_mod(u.value(), u.modulus().modulus()), u.modulus());
}

std::ostream& operator<<(std::ostream& os, const Residue& r) {
  return os << r.value() << " (mod " << r.modulus().modulus() << ")";
}

}  // namespace supercong
