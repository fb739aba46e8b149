#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "supercong/check.hpp"
#include "supercong/factorial.hpp"
#include "supercong/padic.hpp"

namespace supercong {

/// Box sizes r, s, t >= 1 of the triple multinomial sum.
struct TheoremParams {
  int r;
  int s;
  int t;

  TheoremParams(int r, int s, int t);

  friend bool operator==(const TheoremParams&, const TheoremParams&) = default;
};

/// One (i, j) block of the split of the p-scaled sum into A + B + C.
struct DecompositionCell {
  int i;
  int j;
  TruncatedPAdic a;
  TruncatedPAdic b;
  TruncatedPAdic c;

  TruncatedPAdic total() const { return a + b + c; }
};

/// Factorial-table size that covers every binomial touched for prime p.
std::size_t required_table_limit(const TheoremParams& params, u64 p);

/// sum over m1 < rp, m2 < sp, m3 < tp of (m1+m2+m3)! / (m1! m2! m3!) modulo p^k.
///
/// Each term is a table lookup: unit(m1+m2+m3) times the inverse units of m1,
/// m2, m3, shifted by the p-adic valuation. Terms divisible by p^k are skipped.
Residue lhs_naive(const TheoremParams& params, const FactorialTables& tables);
Residue lhs_naive(const TheoremParams& params, const PrimePowerModulus& m);

/// The small-box sum over m1 < r, m2 < s, m3 < t. Evaluated both as the
/// triple sum and as t * sum_{i<r, j<s} binom(i+j,i) binom(i+j+t,i+j) / (i+j+1);
/// a disagreement throws std::logic_error.
mpz_class rhs_small(const TheoremParams& params);

/// The full p-scaled triple sum as an exact integer, built from incremental
/// binomial products without any modular reduction. Requires an odd prime
/// p <= bound.
mpz_class lhs_oracle_exact(const TheoremParams& params, u64 p, u64 bound = 13);

/// A_ij, B_ij, C_ij for 0 <= i < r, 0 <= j < s in row-major order. The tables
/// must cover required_table_limit().
std::vector<DecompositionCell> decompose(const TheoremParams& params, const FactorialTables& tables);

/// lhs_naive against rhs_small modulo p^k ("SS").
CongruenceCheck check_main(const TheoremParams& params, u64 p, int k = 3,
                           int guard = PrimePowerModulus::kDefaultGuard);

/// lhs_naive against the exact oracle reduced modulo p^3 ("SS.oracle").
CongruenceCheck check_main_oracle(const TheoremParams& params, u64 p, u64 bound = 13);

/// Per cell: the closed forms of B and C, B + C = 0, and the target value of A,
/// all modulo p^3; then the sum of all cells against lhs_naive. Needs p > 3.
std::vector<CongruenceCheck> check_decomposition_properties(const TheoremParams& params, u64 p,
                                                            int guard = PrimePowerModulus::kDefaultGuard);

/// Central binomial (1), Catalan (2) and double-square (5) sums modulo p^2 against
/// the Legendre symbol (p/3). Needs p >= 5.
CongruenceCheck check_remark(int id, u64 p);

/// binom(2n, n) / (n + 1) modulo p^k.
Residue catalan_mod(u64 n, const FactorialTables& tables);
Residue catalan_mod(u64 n, const PrimePowerModulus& m);

}  // namespace supercong
