#pragma once

#include <cstdint>

namespace supercong {

using u64 = std::uint64_t;
using i64 = std::int64_t;
__extension__ typedef unsigned __int128 u128;

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(u64 n);

/// (a * b) mod m for m < 2^63.
inline u64 mul_mod(u64 a, u64 b, u64 m) {
  if (m <= 0xFFFFFFFFull) return a * b % m;
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m);

/// Inverse of a modulo m via extended Euclid; throws NotAUnit when gcd(a, m) != 1.
u64 inverse_mod(u64 a, u64 m);

/// The prime power p^k together with g guard digits.
///
/// Residues live modulo p^k. Truncated p-adic units carry k + g digits; up to
/// g divisions by p leave the reported k digits intact. Operands stay below
/// 2^63 and products are formed in 128 bits.
class PrimePowerModulus {
 public:
  static constexpr int kDefaultGuard = 2;

  PrimePowerModulus(u64 p, int k, int guard = kDefaultGuard);

  u64 prime() const { return p_; }
  int exponent() const { return k_; }
  int guard() const { return g_; }
  /// Number of p-adic digits carried by units: k + g.
  int precision() const { return k_ + g_; }
  /// p^k.
  u64 modulus() const { return modulus_; }
  /// p^(k+g).
  u64 working_modulus() const { return working_; }

  /// p^e for 0 <= e <= k + g.
  u64 power(int e) const;

  /// Same prime, different exponent or guard. Skips the primality test.
  PrimePowerModulus with_guard(int guard) const { return PrimePowerModulus(p_, k_, guard, Checked{}); }
  PrimePowerModulus with_exponent(int k) const { return PrimePowerModulus(p_, k, g_, Checked{}); }

  friend bool operator==(const PrimePowerModulus&, const PrimePowerModulus&) = default;

 private:
  struct Checked {};
  PrimePowerModulus(u64 p, int k, int guard, Checked);

  u64 p_;
  int k_;
  int g_;
  u64 modulus_;
  u64 working_;
};

/// v_p(n) for n != 0.
int valuation(u64 n, u64 p);

}  // namespace supercong
