#include "supercong/factorial.hpp"

#include <stdexcept>
#include <string>

#include "supercong/errors.hpp"

namespace supercong {

FactorialTables::FactorialTables(std::size_t limit, const PrimePowerModulus& m)
    : mod_(m), units_(limit + 1), inverse_units_(limit + 1), valuations_(limit + 1) {
  const u64 p = m.prime();
  const u64 w = m.working_modulus();
  units_[0] = 1 % w;
  valuations_[0] = 0;
  for (std::size_t i = 1; i <= limit; ++i) {
    u64 f = i;
    int v = 0;
    while (f % p == 0) {
      f /= p;
      ++v;
    }
    units_[i] = mul_mod(units_[i - 1], f % w, w);
    valuations_[i] = valuations_[i - 1] + v;
  }
  inverse_units_[limit] = inverse_mod(units_[limit], w);
  for (std::size_t i = limit; i > 0; --i) {
    u64 f = i;
    while (f % p == 0) f /= p;
    inverse_units_[i - 1] = mul_mod(inverse_units_[i], f % w, w);
  }
}

TruncatedPAdic binomial_padic(i64 n, i64 r, const FactorialTables& tables) {
  const PrimePowerModulus& m = tables.modulus();
  if (n < 0) throw DomainError("binomial_padic: negative n = " + std::to_string(n));
  if (static_cast<std::size_t>(n) > tables.limit()) {
    throw std::out_of_range("binomial_padic: n = " + std::to_string(n) + " exceeds table limit " +
                            std::to_string(tables.limit()));
  }
  if (r < 0 || r > n) return TruncatedPAdic::zero(m);
  const u64 w = m.working_modulus();
  const auto nn = static_cast<std::size_t>(n), rr = static_cast<std::size_t>(r);
  const u64 u = mul_mod(mul_mod(tables.unit(nn), tables.inverse_unit(rr), w), tables.inverse_unit(nn - rr), w);
  const int v = tables.valuation(nn) - tables.valuation(rr) - tables.valuation(nn - rr);
  return TruncatedPAdic::from_parts(v, u, m);
}

TruncatedPAdic multinomial_padic(i64 m1, i64 m2, i64 m3, const FactorialTables& tables) {
  if (m1 < 0 || m2 < 0 || m3 < 0) throw DomainError("multinomial_padic: negative part");
  return binomial_padic(m1 + m2, m1, tables) * binomial_padic(m1 + m2 + m3, m3, tables);
}

}  // namespace supercong
