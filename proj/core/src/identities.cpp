#include "supercong/identities.hpp"

#include <string>

#include "supercong/errors.hpp"
#include "supercong/exact.hpp"

namespace supercong {

const std::array<std::string_view, 5>& exact_identity_ids() {
  static const std::array<std::string_view, 5> ids = {"DoubleSum", "G24", "S39", "SumInvM", "Vandermonde"};
  return ids;
}

bool identity_takes_prime(std::string_view id) { return id == "DoubleSum" || id == "SumInvM"; }

namespace {

mpq_class frac(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

mpq_class harmonic_exact(u64 n) {
  mpq_class h = 0;
  for (u64 i = 1; i <= n; ++i) h += frac(1, i);
  return h;
}

std::pair<mpq_class, mpq_class> evaluate(std::string_view id, u64 n) {
  if (id == "G24") {
    mpq_class lhs = 0, sum = 0;
    for (u64 m = 0; m < n; ++m) lhs += frac(1, binomial_exact(n - 1, m));
    for (u64 j = 1; j <= n; ++j) sum += frac(pow2_exact(j), j);
    return {lhs, frac(n, pow2_exact(n)) * sum};
  }
  if (id == "S39") {
    mpq_class lhs = 0, tail = 0;
    for (u64 m = 0; m <= n; ++m) lhs += mpq_class(binomial_exact(n, m)) * harmonic_exact(m);
    for (u64 m = 1; m <= n; ++m) tail += frac(1, m * pow2_exact(m));
    return {lhs, mpq_class(pow2_exact(n)) * (harmonic_exact(n) - tail)};
  }
  if (id == "DoubleSum") {
    mpz_class lhs = 0, inner = 0;
    for (u64 l = 1; l < n; ++l) {
      inner += binomial_exact(n, l);
      lhs += binomial_exact(n - 1, l) * inner;
    }
    const mpz_class t = pow2_exact(n - 1);
    return {mpq_class(lhs), mpq_class(t * (t - 1))};
  }
  if (id == "Vandermonde") {
    mpz_class lhs = 0;
    for (u64 m = 0; m <= n; ++m) {
      const mpz_class b = binomial_exact(n, m);
      lhs += b * b;
    }
    return {mpq_class(lhs), mpq_class(binomial_exact(2 * n, n))};
  }
  if (id == "SumInvM") {
    mpq_class lhs = 0;
    for (u64 m = 1; m < n; ++m) lhs += frac(binomial_exact(n - 1, m - 1), m);
    const mpz_class q = (pow2_exact(n - 1) - 1) / n;
    return {lhs, mpq_class(2 * q)};
  }
  throw DomainError("check_exact_identity: unknown identity '" + std::string(id) + "'");
}

}  // namespace

CongruenceCheck check_exact_identity(std::string_view id, u64 argument) {
  const bool by_prime = identity_takes_prime(id);
  if (argument < 1) throw DomainError("check_exact_identity: argument must be >= 1");
  if (by_prime && (argument < 3 || !is_prime(argument))) {
    throw DomainError("check_exact_identity: " + std::string(id) + " needs an odd prime, got " +
                      std::to_string(argument));
  }
  return timed([&] {
    const auto [lhs, rhs] = evaluate(id, argument);
    CongruenceCheck c;
    c.id = std::string(id);
    c.prime = by_prime ? argument : 0;
    if (!by_prime) c.params = {{"k", static_cast<i64>(argument)}};
    c.lhs = to_decimal(lhs);
    c.rhs = to_decimal(rhs);
    c.exponent = 0;
    c.modulus = "exact";
    c.status = lhs == rhs ? CheckStatus::holds : CheckStatus::fails;
    return c;
  });
}

}  // namespace supercong
