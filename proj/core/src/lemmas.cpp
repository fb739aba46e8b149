#include "supercong/lemmas.hpp"

#include <string>

#include "supercong/errors.hpp"
#include "supercong/number_theory.hpp"
#include "supercong/padic.hpp"

namespace supercong {

namespace {

using P = TruncatedPAdic;

void require_p_above_3(const LemmaContext& ctx, std::string_view what) {
  if (ctx.prime() <= 3) {
    throw DomainError(std::string(what) + " is stated for p > 3, got p = " + std::to_string(ctx.prime()));
  }
}

void require_table_range(const LemmaContext& ctx, int k, i64 top, std::string_view what) {
  if (top < 0 || static_cast<std::size_t>(top) > ctx.tables(k).limit()) {
    throw DomainError(std::string(what) + ": binomial top index " + std::to_string(top) +
                      " outside the factorial tables (raise ij_max)");
  }
}

P binom(const LemmaContext& ctx, int k, i64 n, i64 r) { return binomial_padic(n, r, ctx.tables(k)); }

P integer(const LemmaContext& ctx, int k, i64 n) { return P::from_integer(n, ctx.modulus(k)); }

P rational(const LemmaContext& ctx, int k, i64 num, i64 den) { return P::from_rational(num, den, ctx.modulus(k)); }

P harmonic1(const LemmaContext& ctx, int k, i64 n) {
  return P::from_residue(ctx.harmonic(k)[static_cast<u64>(n)], ctx.modulus(k));
}

P fermat_q(const LemmaContext& ctx, int k) { return P::from_residue(ctx.fermat_quotient(k), ctx.modulus(k)); }

i64 ip(const LemmaContext& ctx) { return static_cast<i64>(ctx.prime()); }

}  // namespace

LemmaContext::LemmaContext(u64 p, int ij_max, int guard) : p_(p), ij_max_(ij_max) {
  if (ij_max < 0) throw DomainError("LemmaContext: ij_max must be >= 0");
  const PrimePowerModulus base(p, 1, guard);
  const std::size_t limit = static_cast<std::size_t>(2 * ij_max + 2 < 4 ? 4 : 2 * ij_max + 2) * p;
  levels_.reserve(3);
  for (int k = 1; k <= 3; ++k) {
    const PrimePowerModulus m = base.with_exponent(k);
    levels_.push_back(Level{m, FactorialTables(limit, m), harmonic_prefix_table(CompositionSignature({1}), p - 1, m),
                            fermat_quotient2(m)});
  }
}

const std::array<std::string_view, 10>& known_fact_ids() {
  static const std::array<std::string_view, 10> ids = {"C1", "C2", "C3", "C4", "C44", "C66", "C10", "C55", "C5", "C6"};
  return ids;
}

CongruenceCheck check_known_mhs(std::string_view id, const LemmaContext& ctx) {
  require_p_above_3(ctx, "known harmonic-sum congruence");
  return timed([&] {
    struct Fact {
      std::vector<int> slots;
      i64 x_num, x_den;
      int k;
      int q_degree;  // rhs = coeff * q^degree
      int coeff;
    };
    Fact f;
    if (id == "C1") f = {{1}, 1, 1, 2, 0, 0};
    else if (id == "C2") f = {{2}, 1, 1, 1, 0, 0};
    else if (id == "C3") f = {{1, 1}, 1, 1, 1, 0, 0};
    else if (id == "C4") f = {{-1}, 2, 1, 2, 1, -2};
    else if (id == "C44") f = {{-1}, 1, 2, 1, 1, 1};
    else if (id == "C66") f = {{-2}, -1, 1, 1, 0, 0};
    else if (id == "C10") f = {{-2}, 2, 1, 1, 2, -1};
    else if (id == "C55") f = {{1, -1}, -1, 1, 1, 2, 1};
    else if (id == "C5") f = {{1, -1}, 2, 1, 1, 0, 0};
    else if (id == "C6") f = {{-1, 1}, 1, 2, 1, 0, 0};
    else throw DomainError("check_known_mhs: unknown fact id '" + std::string(id) + "'");

    const PrimePowerModulus& m = ctx.modulus(f.k);
    const CompositionSignature sig(f.slots, f.x_num, f.x_den);
    const Residue lhs = harmonic_sum(sig, ctx.prime() - 1, m);
    const Residue q = ctx.fermat_quotient(f.k);
    const Residue rhs = Residue(f.coeff, m) * q.pow(static_cast<u64>(f.q_degree));
    CongruenceCheck c = residue_check(std::string(id), ctx.prime(), {}, lhs, rhs);
    c.note = "H_{p-1}" + sig.to_string();
    return c;
  });
}

CongruenceCheck check_lemma1(std::string_view id, const LemmaContext& ctx) {
  require_p_above_3(ctx, "B1/B2");
  if (id != "B1" && id != "B2") throw DomainError("check_lemma1: unknown id '" + std::string(id) + "'");
  return timed([&] {
    const PrimePowerModulus& m = ctx.modulus(1);
    const Residue two(2, m);
    Residue inner(0, m), total(0, m), two_k(1, m);
    for (u64 k = 1; k < ctx.prime(); ++k) {
      two_k *= two;
      const Residue inv_k = mod_inverse(Residue::from_unsigned(k, m));
      if (id == "B1") {
        // inner = sum_{j<k} 2^j / j
        total += inner * inv_k * mod_inverse(two_k);
        inner += two_k * inv_k;
      } else {
        // inner = sum_{j<k} 1 / (j 2^j)
        total += two_k * inv_k * inner;
        inner += inv_k * mod_inverse(two_k);
      }
    }
    const Residue q = ctx.fermat_quotient(1);
    const Residue rhs = id == "B1" ? Residue(0, m) : Residue(-2, m) * q * q;
    return residue_check(std::string(id), ctx.prime(), {}, total, rhs);
  });
}

CongruenceCheck check_c7(const LemmaContext& ctx) {
  require_p_above_3(ctx, "C7");
  return timed([&] {
    const i64 p = ip(ctx);
    P total = P::zero(ctx.modulus(1));
    for (i64 k = 2; k < p; ++k) {
      P inner = P::zero(ctx.modulus(1));
      for (i64 m = k; m < p; ++m) {
        const P term = binom(ctx, 1, m, k).inverse();
        inner += (m - k) % 2 == 0 ? term : -term;
      }
      total += inner * rational(ctx, 1, 1, k * k);
    }
    const Residue rhs = Residue(-2, ctx.modulus(1)) * ctx.fermat_quotient(1);
    return residue_check("C7", ctx.prime(), {}, total.reduce(), rhs);
  });
}

CongruenceCheck check_cc22(const LemmaContext& ctx, int i, int j, int r) {
  require_p_above_3(ctx, "CC22");
  const i64 p = ip(ctx);
  if (i < 0 || j < 1 || r <= 0 || r >= p) {
    throw DomainError("check_cc22: need i >= 0, j >= 1, 0 < r < p");
  }
  require_table_range(ctx, 3, (i + j) * p, "check_cc22");
  return timed([&] {
    const P lhs = binom(ctx, 3, (i + j) * p, r + i * p);
    const P inner = integer(ctx, 3, i + j - 1) * harmonic1(ctx, 3, r - 1) + rational(ctx, 3, i, r);
    const P correction = P::one(ctx.modulus(3)) - integer(ctx, 3, p) * inner;
    const P rhs = binom(ctx, 3, i + j, i) * binom(ctx, 3, p, r) * integer(ctx, 3, j) * correction;
    return residue_check("CC22", ctx.prime(), {{"i", i}, {"j", j}, {"r", r}}, lhs.reduce(), rhs.reduce());
  });
}

CongruenceCheck check_binom_p_r_expansion(const LemmaContext& ctx, int r) {
  const i64 p = ip(ctx);
  if (r <= 0 || r >= p) throw DomainError("check_binom_p_r_expansion: need 0 < r < p");
  return timed([&] {
    const P lhs = binom(ctx, 3, p, r);
    const P lead = rational(ctx, 3, r % 2 == 1 ? p : -p, r);
    const P rhs = lead * (P::one(ctx.modulus(3)) - integer(ctx, 3, p) * harmonic1(ctx, 3, r - 1));
    return residue_check("binom_p_r", ctx.prime(), {{"r", r}}, lhs.reduce(), rhs.reduce());
  });
}

CongruenceCheck check_cc2(const LemmaContext& ctx, int i, int j) {
  require_p_above_3(ctx, "CC2");
  const i64 p = ip(ctx);
  if (i < 0 || j < 0) throw DomainError("check_cc2: need i, j >= 0");
  require_table_range(ctx, 3, p - 1 + (i + j) * p, "check_cc2");
  return timed([&] {
    P lhs = P::zero(ctx.modulus(3));
    for (i64 m = 0; m < p; ++m) lhs += binom(ctx, 3, p - 1 + (i + j) * p, m + i * p);
    const P q = fermat_q(ctx, 3);
    const P pp = integer(ctx, 3, p);
    const P rhs = binom(ctx, 3, i + j, i) *
                  (P::one(ctx.modulus(3)) + integer(ctx, 3, i + j + 1) * pp * q +
                   binom(ctx, 3, i + j + 1, 2) * pp * pp * q * q);
    return residue_check("CC2", ctx.prime(), {{"i", i}, {"j", j}}, lhs.reduce(), rhs.reduce());
  });
}

CongruenceCheck check_aux_lemma3_sums(std::string_view id, const LemmaContext& ctx) {
  require_p_above_3(ctx, "auxiliary harmonic sums");
  const bool weighted = id == "H-weighted";
  if (!weighted && id != "inv-r") throw DomainError("check_aux_lemma3_sums: unknown id '" + std::string(id) + "'");
  return timed([&] {
    const i64 p = ip(ctx);
    const PrimePowerModulus& m2 = ctx.modulus(2);
    P total = P::zero(m2);
    P inner = P::zero(m2);  // sum_{r<=l} binom(p, r) * w(r)
    for (i64 l = 1; l < p; ++l) {
      const P weight = weighted ? harmonic1(ctx, 2, l - 1) : rational(ctx, 2, 1, l);
      inner += binom(ctx, 2, p, l) * weight;
      total += binom(ctx, 2, p - 1, l) * inner;
    }
    const P q = fermat_q(ctx, 2);
    const P rhs = weighted ? rational(ctx, 2, -p, 2) * q * q : P::zero(m2);
    return residue_check(weighted ? "aux.H_weighted" : "aux.inv_r", ctx.prime(), {}, total.reduce(), rhs.reduce());
  });
}

CongruenceCheck check_cc1(const LemmaContext& ctx, int i, int j, int k, int m) {
  const i64 p = ip(ctx);
  if (i < 0 || j < 0 || m < 0 || m > k || k >= p) throw DomainError("check_cc1: need i, j >= 0 and 0 <= m <= k < p");
  require_table_range(ctx, 2, k + (i + j) * p, "check_cc1");
  return timed([&] {
    const P lhs = binom(ctx, 2, k + (i + j) * p, m + i * p);
    const P inner = integer(ctx, 2, i + j) * harmonic1(ctx, 2, k) - integer(ctx, 2, j) * harmonic1(ctx, 2, k - m) -
                    integer(ctx, 2, i) * harmonic1(ctx, 2, m);
    const P rhs = binom(ctx, 2, i + j, i) * binom(ctx, 2, k, m) * (P::one(ctx.modulus(2)) + integer(ctx, 2, p) * inner);
    return residue_check("CC1", ctx.prime(), {{"i", i}, {"j", j}, {"k", k}, {"m", m}}, lhs.reduce(), rhs.reduce());
  });
}

CongruenceCheck check_cc11(const LemmaContext& ctx, int i, int j, int k) {
  const i64 p = ip(ctx);
  if (i < 0 || j < 0 || k < 0 || k >= p) throw DomainError("check_cc11: need i, j >= 0 and 0 <= k < p");
  require_table_range(ctx, 2, k + (i + j) * p, "check_cc11");
  return timed([&] {
    const PrimePowerModulus& m2 = ctx.modulus(2);
    P lhs = P::zero(m2);
    for (i64 m = 0; m <= k; ++m) lhs += binom(ctx, 2, k + (i + j) * p, m + i * p);
    P tail = P::zero(m2);  // sum_{m=1}^{k} 1 / (m 2^m)
    P two_m = P::one(m2);
    for (i64 m = 1; m <= k; ++m) {
      two_m *= integer(ctx, 2, 2);
      tail += (integer(ctx, 2, m) * two_m).inverse();
    }
    const P rhs = integer(ctx, 2, 2).pow(static_cast<unsigned>(k)) * binom(ctx, 2, i + j, i) *
                  (P::one(m2) + integer(ctx, 2, p * (i + j)) * tail);
    return residue_check("CC11", ctx.prime(), {{"i", i}, {"j", j}, {"k", k}}, lhs.reduce(), rhs.reduce());
  });
}

CongruenceCheck check_wolstenholme(const LemmaContext& ctx, int a, int b, bool diagnostic) {
  if (ctx.prime() < 5 && !diagnostic) {
    throw DomainError("check_wolstenholme: Wolstenholme's theorem needs p >= 5");
  }
  const i64 p = ip(ctx);
  if (a < 0 || b < 0 || b > a) throw DomainError("check_wolstenholme: need 0 <= b <= a");
  require_table_range(ctx, 3, a * p, "check_wolstenholme");
  return timed([&] {
    CongruenceCheck c = residue_check("wolstenholme", ctx.prime(), {{"a", a}, {"b", b}},
                                      binom(ctx, 3, a * p, b * p).reduce(), binom(ctx, 3, a, b).reduce());
    c.diagnostic = diagnostic && ctx.prime() < 5;
    return c;
  });
}

CongruenceCheck check_lucas(const LemmaContext& ctx, int n1, int n0, int k1, int k0) {
  const i64 p = ip(ctx);
  if (n1 < 0 || k1 < 0 || n0 < 0 || k0 < 0 || n0 >= p || k0 >= p) {
    throw DomainError("check_lucas: need n1, k1 >= 0 and 0 <= n0, k0 < p");
  }
  require_table_range(ctx, 1, n1 * p + n0, "check_lucas");
  return timed([&] {
    const P lhs = binom(ctx, 1, n1 * p + n0, k1 * p + k0);
    const P rhs = binom(ctx, 1, n1, k1) * binom(ctx, 1, n0, k0);
    return residue_check("lucas", ctx.prime(), {{"n1", n1}, {"n0", n0}, {"k1", k1}, {"k0", k0}}, lhs.reduce(),
                         rhs.reduce());
  });
}

CongruenceCheck check_power_expansion(const LemmaContext& ctx, int i, int j) {
  const i64 p = ip(ctx);
  if (i < 0 || j < 0) throw DomainError("check_power_expansion: need i, j >= 0");
  const i64 n = i + j + 1;
  if (n % p == 0) {
    throw NonUnitDenominator("check_power_expansion: p = " + std::to_string(p) + " divides i+j+1 = " +
                             std::to_string(n));
  }
  return timed([&] {
    const P lhs = integer(ctx, 3, 2).pow(static_cast<unsigned>((p - 1) * n)) / integer(ctx, 3, n);
    const P q = fermat_q(ctx, 3);
    const P pp = integer(ctx, 3, p);
    const P rhs = rational(ctx, 3, 1, n) + pp * q + rational(ctx, 3, i + j, 2) * pp * pp * q * q;
    return residue_check("power_expansion", ctx.prime(), {{"i", i}, {"j", j}}, lhs.reduce(), rhs.reduce());
  });
}

}  // namespace supercong
