#include "supercong/padic.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "supercong/errors.hpp"

namespace supercong {

namespace {

// Splits |n| into p^v * rest; returns v.
int strip(u64& n, u64 p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

u64 magnitude(i64 n) { return n < 0 ? u64(0) - static_cast<u64>(n) : static_cast<u64>(n); }

}  // namespace

TruncatedPAdic TruncatedPAdic::zero(const PrimePowerModulus& m) { return TruncatedPAdic(m); }

TruncatedPAdic TruncatedPAdic::bounded_zero(int absolute, const PrimePowerModulus& m) {
  TruncatedPAdic z(m);
  z.kind_ = Kind::bounded_zero;
  z.val_ = absolute;
  return z;
}

TruncatedPAdic TruncatedPAdic::from_parts(int valuation, u64 unit, const PrimePowerModulus& m) {
  if (unit % m.prime() == 0) {
    throw NotAUnit("TruncatedPAdic::from_parts: unit " + std::to_string(unit) + " is divisible by p");
  }
  TruncatedPAdic x(m);
  x.kind_ = Kind::nonzero;
  x.val_ = valuation;
  x.rel_ = m.precision();
  x.unit_ = unit % m.working_modulus();
  return x;
}

TruncatedPAdic TruncatedPAdic::from_integer(i64 n, const PrimePowerModulus& m) {
  if (n == 0) return zero(m);
  u64 mag = magnitude(n);
  const int v = strip(mag, m.prime());
  const u64 w = m.working_modulus();
  u64 u = mag % w;
  if (n < 0) u = w - u;
  return from_parts(v, u, m);
}

TruncatedPAdic TruncatedPAdic::from_rational(i64 num, i64 den, const PrimePowerModulus& m) {
  if (den == 0) throw DivisionByZero("TruncatedPAdic::from_rational: zero denominator");
  if (num == 0) return zero(m);
  u64 n = magnitude(num), d = magnitude(den);
  const int vn = strip(n, m.prime());
  const int vd = strip(d, m.prime());
  const u64 w = m.working_modulus();
  u64 u = mul_mod(n % w, inverse_mod(d % w, w), w);
  if ((num < 0) != (den < 0)) u = w - u;
  return from_parts(vn - vd, u, m);
}

TruncatedPAdic TruncatedPAdic::from_residue(const Residue& r, const PrimePowerModulus& m) {
  if (r.modulus().prime() != m.prime()) throw ModulusMismatch("TruncatedPAdic::from_residue: different primes");
  const int known = r.modulus().exponent();
  if (r.value() == 0) return bounded_zero(known, m);
  u64 u = r.value();
  const int v = strip(u, m.prime());
  TruncatedPAdic x = from_parts(v, u, m);
  x.rel_ = std::min(m.precision(), known - v);
  x.unit_ %= m.power(x.rel_);
  return x;
}

TruncatedPAdic TruncatedPAdic::power_of_p(int e, const PrimePowerModulus& m) { return from_parts(e, 1, m); }

int TruncatedPAdic::valuation() const {
  if (kind_ != Kind::nonzero) throw DomainError("TruncatedPAdic::valuation: zero has no valuation");
  return val_;
}

int TruncatedPAdic::absolute_precision() const {
  switch (kind_) {
    case Kind::exact_zero:
      return kExactPrecision;
    case Kind::bounded_zero:
      return val_;
    case Kind::nonzero:
      break;
  }
  return val_ + rel_;
}

void TruncatedPAdic::require_same(const TruncatedPAdic& o) const {
  if (mod_ != o.mod_) {
    throw ModulusMismatch("TruncatedPAdic: operands use different prime-power moduli");
  }
}

TruncatedPAdic TruncatedPAdic::operator-() const {
  if (kind_ != Kind::nonzero) return *this;
  TruncatedPAdic r = *this;
  r.unit_ = mod_.power(rel_) - unit_;
  return r;
}

TruncatedPAdic& TruncatedPAdic::operator+=(const TruncatedPAdic& o) {
  require_same(o);
  const int guard = mod_.guard();
  for (const TruncatedPAdic* x : {static_cast<const TruncatedPAdic*>(this), &o}) {
    if (x->kind_ == Kind::nonzero && x->val_ < -guard) {
      throw PrecisionExhausted("TruncatedPAdic: summand of valuation " + std::to_string(x->val_) +
                               " is below the guard -" + std::to_string(guard));
    }
  }
  if (o.kind_ == Kind::exact_zero) return *this;
  if (kind_ == Kind::exact_zero) return *this = o;

  const int absolute = std::min(absolute_precision(), o.absolute_precision());
  if (kind_ == Kind::bounded_zero || o.kind_ == Kind::bounded_zero) {
    const TruncatedPAdic& nz = kind_ == Kind::nonzero ? *this : o;
    if (nz.kind_ != Kind::nonzero || nz.val_ >= absolute) return *this = bounded_zero(absolute, mod_);
    TruncatedPAdic r = nz;
    r.rel_ = absolute - nz.val_;
    r.unit_ %= mod_.power(r.rel_);
    return *this = r;
  }

  const int v = std::min(val_, o.val_);
  const int rel = absolute - v;  // 1 <= rel <= k + g
  const u64 pr = mod_.power(rel);
  auto shifted = [&](const TruncatedPAdic& x) -> u64 {
    const int shift = x.val_ - v;
    if (shift >= rel) return 0;
    return mul_mod(x.unit_ % pr, mod_.power(shift), pr);
  };
  u64 s = shifted(*this) + shifted(o);
  if (s >= pr) s -= pr;
  if (s == 0) return *this = bounded_zero(absolute, mod_);
  const int c = strip(s, mod_.prime());
  kind_ = Kind::nonzero;
  val_ = v + c;
  rel_ = rel - c;
  unit_ = s;
  return *this;
}

TruncatedPAdic& TruncatedPAdic::operator*=(const TruncatedPAdic& o) {
  require_same(o);
  if (kind_ == Kind::exact_zero) return *this;
  if (o.kind_ == Kind::exact_zero) return *this = o;
  if (kind_ == Kind::bounded_zero || o.kind_ == Kind::bounded_zero) {
    // A bounded zero times p^v * u is known to be divisible by p^(a + v).
    // val_ holds the absolute precision for a bounded zero and the valuation otherwise.
    return *this = bounded_zero(val_ + o.val_, mod_);
  }
  val_ += o.val_;
  rel_ = std::min(rel_, o.rel_);
  const u64 pr = mod_.power(rel_);
  unit_ = mul_mod(unit_ % pr, o.unit_ % pr, pr);
  return *this;
}

TruncatedPAdic TruncatedPAdic::inverse() const {
  if (kind_ != Kind::nonzero) throw DivisionByZero("TruncatedPAdic::inverse: division by zero");
  TruncatedPAdic r = *this;
  r.val_ = -val_;
  r.unit_ = inverse_mod(unit_, mod_.power(rel_));
  return r;
}

TruncatedPAdic TruncatedPAdic::pow(unsigned e) const {
  TruncatedPAdic result = one(mod_);
  TruncatedPAdic base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Residue TruncatedPAdic::reduce() const {
  const int k = mod_.exponent();
  const PrimePowerModulus& target = mod_;
  if (kind_ == Kind::exact_zero) return Residue(0, target);
  if (kind_ == Kind::nonzero && val_ < 0) {
    throw NonUnitDenominator("TruncatedPAdic::reduce: valuation " + std::to_string(val_) +
                             " leaves p in the denominator");
  }
  if (absolute_precision() < k) {
    throw PrecisionExhausted("TruncatedPAdic::reduce: only " + std::to_string(absolute_precision()) +
                             " digits known, " + std::to_string(k) + " requested");
  }
  if (kind_ == Kind::bounded_zero || val_ >= k) return Residue(0, target);
  const u64 m = mod_.modulus();
  return Residue::from_unsigned(mul_mod(unit_ % m, mod_.power(val_), m), target);
}

bool operator==(const TruncatedPAdic& a, const TruncatedPAdic& b) {
  return a.mod_ == b.mod_ && a.kind_ == b.kind_ && a.val_ == b.val_ && a.rel_ == b.rel_ && a.unit_ == b.unit_;
}

std::ostream& operator<<(std::ostream& os, const TruncatedPAdic& x) {
  if (x.is_exact_zero()) return os << "0";
  if (x.is_zero()) return os << "O(" << x.modulus().prime() << "^" << x.absolute_precision() << ")";
  return os << x.unit() << "*" << x.modulus().prime() << "^" << x.valuation() << " + O("
            << x.modulus().prime() << "^" << x.absolute_precision() << ")";
}

}  // namespace supercong
