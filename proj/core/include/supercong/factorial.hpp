#pragma once

#include <cstddef>
#include <vector>

#include "supercong/modulus.hpp"
#include "supercong/padic.hpp"

namespace supercong {

/// n! split as p^(v_p(n!)) * unit for every n <= N.
///
/// Units are kept modulo p^(k+g) together with their inverses, so a binomial
/// or multinomial coefficient costs a handful of multiplications.
class FactorialTables {
 public:
  /// One sequential pass over 1..N multiplying the p-free part of each factor.
  FactorialTables(std::size_t limit, const PrimePowerModulus& m);

  std::size_t limit() const { return units_.size() - 1; }
  const PrimePowerModulus& modulus() const { return mod_; }

  /// n! / p^(v_p(n!)) mod p^(k+g).
  u64 unit(std::size_t n) const { return units_.at(n); }
  u64 inverse_unit(std::size_t n) const { return inverse_units_.at(n); }
  /// v_p(n!) = sum_i floor(n / p^i).
  int valuation(std::size_t n) const { return valuations_.at(n); }

  /// Unchecked views for tight loops.
  const std::vector<u64>& units() const { return units_; }
  const std::vector<u64>& inverse_units() const { return inverse_units_; }
  const std::vector<int>& valuations() const { return valuations_; }

 private:
  PrimePowerModulus mod_;
  std::vector<u64> units_;
  std::vector<u64> inverse_units_;
  std::vector<int> valuations_;
};

/// n! / (r! (n-r)!). Exact zero when r < 0 or r > n; out_of_range when n exceeds the tables.
TruncatedPAdic binomial_padic(i64 n, i64 r, const FactorialTables& tables);

/// (m1 + m2 + m3)! / (m1! m2! m3!).
TruncatedPAdic multinomial_padic(i64 m1, i64 m2, i64 m3, const FactorialTables& tables);

}  // namespace supercong
