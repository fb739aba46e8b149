#pragma once

#include <string>

#include <gmpxx.h>

#include "supercong/modulus.hpp"
#include "supercong/residue.hpp"

namespace supercong {

/// binom(n, r) as an arbitrary-precision integer; 0 when r > n.
mpz_class binomial_exact(u64 n, u64 r);

mpz_class pow2_exact(u64 e);

/// The class of an exact rational modulo p^k. NonUnitDenominator when p divides the denominator.
Residue reduce_exact(const mpq_class& x, const PrimePowerModulus& m);
Residue reduce_exact(const mpz_class& x, const PrimePowerModulus& m);

/// "a" or "a/b" in lowest terms.
std::string to_decimal(const mpq_class& x);

}  // namespace supercong
