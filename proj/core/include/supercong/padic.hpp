#pragma once

#include <climits>
#include <iosfwd>

#include "supercong/modulus.hpp"
#include "supercong/residue.hpp"

namespace supercong {

/// A p-adic number u * p^v truncated to finitely many digits.
///
/// A non-zero value stores its valuation v and a unit u (p does not divide u)
/// known modulo p^rel, where rel <= k + g is the relative precision. The
/// absolute precision v + rel says modulo which power of p the value is known.
///
/// Zero comes in two flavours: the exact zero, and a "bounded" zero that is
/// only known to be divisible by p^a after a cancelling addition. Products and
/// quotients keep relative precision; sums lose digits only through
/// cancellation, so a final result is trustworthy modulo p^k whenever every
/// summand has valuation >= -g. Adding a summand below -g is refused.
class TruncatedPAdic {
 public:
  static constexpr int kExactPrecision = INT_MAX;

  static TruncatedPAdic zero(const PrimePowerModulus& m);
  static TruncatedPAdic one(const PrimePowerModulus& m) { return from_integer(1, m); }
  static TruncatedPAdic from_integer(i64 n, const PrimePowerModulus& m);
  /// num / den with the p-parts moved into the valuation. DivisionByZero when den == 0.
  static TruncatedPAdic from_rational(i64 num, i64 den, const PrimePowerModulus& m);
  /// unit * p^valuation; `unit` must be coprime to p and is reduced modulo p^(k+g).
  static TruncatedPAdic from_parts(int valuation, u64 unit, const PrimePowerModulus& m);
  /// The integer class of `r`, known modulo p^(r's exponent).
  static TruncatedPAdic from_residue(const Residue& r, const PrimePowerModulus& m);
  static TruncatedPAdic power_of_p(int e, const PrimePowerModulus& m);

  bool is_zero() const { return kind_ != Kind::nonzero; }
  bool is_exact_zero() const { return kind_ == Kind::exact_zero; }
  /// Valuation of a non-zero value. DomainError for zero.
  int valuation() const;
  /// Unit part modulo p^relative_precision(). Zero for zero values.
  u64 unit() const { return unit_; }
  int relative_precision() const { return kind_ == Kind::nonzero ? rel_ : 0; }
  /// Digits known: v + rel for non-zero values, kExactPrecision for the exact zero.
  int absolute_precision() const;
  const PrimePowerModulus& modulus() const { return mod_; }

  TruncatedPAdic operator-() const;
  TruncatedPAdic& operator+=(const TruncatedPAdic& o);
  TruncatedPAdic& operator-=(const TruncatedPAdic& o) { return *this += -o; }
  TruncatedPAdic& operator*=(const TruncatedPAdic& o);
  TruncatedPAdic& operator/=(const TruncatedPAdic& o) { return *this *= o.inverse(); }
  TruncatedPAdic inverse() const;
  TruncatedPAdic pow(unsigned e) const;

  friend TruncatedPAdic operator+(TruncatedPAdic a, const TruncatedPAdic& b) { return a += b; }
  friend TruncatedPAdic operator-(TruncatedPAdic a, const TruncatedPAdic& b) { return a -= b; }
  friend TruncatedPAdic operator*(TruncatedPAdic a, const TruncatedPAdic& b) { return a *= b; }
  friend TruncatedPAdic operator/(TruncatedPAdic a, const TruncatedPAdic& b) { return a /= b; }

  /// Residue modulo p^k. NonUnitDenominator when v < 0; PrecisionExhausted when
  /// fewer than k digits are known.
  Residue reduce() const;

  /// Structural equality: same kind, valuation, precision and unit.
  friend bool operator==(const TruncatedPAdic& a, const TruncatedPAdic& b);

 private:
  enum class Kind : unsigned char { exact_zero, bounded_zero, nonzero };

  explicit TruncatedPAdic(const PrimePowerModulus& m) : mod_(m) {}
  void require_same(const TruncatedPAdic& o) const;
  static TruncatedPAdic bounded_zero(int absolute, const PrimePowerModulus& m);

  PrimePowerModulus mod_;
  Kind kind_ = Kind::exact_zero;
  int val_ = 0;  // valuation, or absolute precision of a bounded zero
  int rel_ = 0;
  u64 unit_ = 0;
};

std::ostream& operator<<(std::ostream& os, const TruncatedPAdic& x);

}  // namespace supercong
