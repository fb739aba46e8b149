#include "supercong/number_theory.hpp"

#include <string>

#include "supercong/errors.hpp"

namespace supercong {

Residue fermat_quotient2(const PrimePowerModulus& m) {
  const u64 p = m.prime();
  const u64 mk = m.modulus();
  if (mk > (u64{1} << 63) / p) {
    throw ModulusOverflow("fermat_quotient2: p^(k+1) exceeds the operand bound");
  }
  const u64 big = mk * p;  // 2^(p-1) is needed to one extra digit
  const u64 t = pow_mod(2, p - 1, big);
  const u64 numerator = (t + big - 1) % big;
  if (numerator % p != 0) throw ArithmeticError("fermat_quotient2: 2^(p-1) != 1 mod p; p not prime?");
  return Residue::from_unsigned(numerator / p, m);
}

int legendre_symbol_3(u64 p) {
  switch (p % 3) {
    case 1:
      return 1;
    case 2:
      return -1;
    default:
      throw DomainError("legendre_symbol_3: (p/3) is undefined for p = " + std::to_string(p));
  }
}

}  // namespace supercong
