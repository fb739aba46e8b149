#include "supercong/exact.hpp"

#include <string>

#include "supercong/errors.hpp"

namespace supercong {

mpz_class binomial_exact(u64 n, u64 r) {
  mpz_class out;
  if (r > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return out;
}

mpz_class pow2_exact(u64 e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

Residue reduce_exact(const mpz_class& x, const PrimePowerModulus& m) {
  mpz_class mod{std::to_string(m.modulus())};
  mpz_class r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
  return Residue::from_unsigned(std::stoull(r.get_str()), m);
}

Residue reduce_exact(const mpq_class& x, const PrimePowerModulus& m) {
  const Residue num = reduce_exact(mpz_class(x.get_num()), m);
  const Residue den = reduce_exact(mpz_class(x.get_den()), m);
  if (!den.is_unit()) {
    throw NonUnitDenominator("reduce_exact: denominator of " + x.get_str() + " is divisible by p");
  }
  return num * mod_inverse(den);
}

std::string to_decimal(const mpq_class& x) { return x.get_str(); }

}  // namespace supercong
