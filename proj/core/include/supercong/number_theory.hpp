#pragma once

#include "supercong/modulus.hpp"
#include "supercong/residue.hpp"

namespace supercong {

/// Fermat quotient q_p(2) = (2^(p-1) - 1) / p modulo p^k.
Residue fermat_quotient2(const PrimePowerModulus& m);

/// Legendre symbol (p/3): +1 for p = 1 (mod 3), -1 for p = 2 (mod 3). DomainError for p = 3.
int legendre_symbol_3(u64 p);

}  // namespace supercong
