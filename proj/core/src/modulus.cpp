#include "supercong/modulus.hpp"

#include <string>

#include "supercong/errors.hpp"

namespace supercong {

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

namespace {

u64 mul_full(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_full(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_full(result, base, m);
    base = mul_full(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
  u64 x = pow_full(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int r = 1; r < s; ++r) {
    x = mul_full(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic below 3.3 * 10^24.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

u64 inverse_mod(u64 a, u64 m) {
  __extension__ typedef __int128 i128;
  i128 old_r = static_cast<i128>(a % m), r = static_cast<i128>(m);
  i128 old_s = 1, s = 0;
  while (r != 0) {
    const i128 q = old_r / r;
    i128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw NotAUnit("inverse_mod: " + std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  }
  old_s %= static_cast<i128>(m);
  if (old_s < 0) old_s += m;
  return static_cast<u64>(old_s);
}

int valuation(u64 n, u64 p) {
  int v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

PrimePowerModulus::PrimePowerModulus(u64 p, int k, int guard) : PrimePowerModulus(p, k, guard, Checked{}) {
  if (p < 3 || !is_prime(p)) {
    throw DomainError("PrimePowerModulus: p = " + std::to_string(p) + " is not an odd prime");
  }
}

PrimePowerModulus::PrimePowerModulus(u64 p, int k, int guard, Checked) : p_(p), k_(k), g_(guard), modulus_(1), working_(1) {
  if (p < 2) throw DomainError("PrimePowerModulus: p must be a prime");
  if (k < 1) throw DomainError("PrimePowerModulus: exponent must be >= 1");
  if (guard < 0) throw DomainError("PrimePowerModulus: guard must be >= 0");
  constexpr u64 kBound = u64{1} << 63;
  u64 acc = 1;
  for (int e = 0; e < k + guard; ++e) {
    if (acc > (kBound - 1) / p) {
      throw ModulusOverflow("PrimePowerModulus: " + std::to_string(p) + "^" + std::to_string(k + guard) +
                            " exceeds the 2^63 operand bound");
    }
    acc *= p;
    if (e + 1 == k) modulus_ = acc;
  }
  working_ = acc;
}

u64 PrimePowerModulus::power(int e) const {
  if (e < 0 || e > precision()) {
    throw DomainError("PrimePowerModulus::power: exponent " + std::to_string(e) + " out of range");
  }
  u64 acc = 1;
  for (int i = 0; i < e; ++i) acc *= p_;
  return acc;
}

}  // namespace supercong
