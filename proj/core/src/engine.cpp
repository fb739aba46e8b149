#include "supercong/engine.hpp"

#include <stdexcept>
#include <string>

#include "supercong/errors.hpp"
#include "supercong/exact.hpp"
#include "supercong/number_theory.hpp"

namespace supercong {

namespace {

using P = TruncatedPAdic;

std::vector<Param> rst_params(const TheoremParams& x) { return {{"r", x.r}, {"s", x.s}, {"t", x.t}}; }

void require_tables(const TheoremParams& params, const FactorialTables& tables, const char* what) {
  const std::size_t need = required_table_limit(params, tables.modulus().prime());
  if (tables.limit() < need) {
    throw std::out_of_range(std::string(what) + ": factorial tables cover " + std::to_string(tables.limit()) +
                            ", need " + std::to_string(need));
  }
}

// Products of two residues below 2^26 stay below 2^52, so 2048 of them can be
// accumulated in 64 bits before a reduction.
constexpr u64 kLazyBound = u64{1} << 26;
constexpr std::size_t kLazyBlock = 2048;

}  // namespace

TheoremParams::TheoremParams(int r_, int s_, int t_) : r(r_), s(s_), t(t_) {
  if (r < 1 || s < 1 || t < 1) {
    throw DomainError("TheoremParams: r, s, t must be positive, got (" + std::to_string(r) + "," +
                      std::to_string(s) + "," + std::to_string(t) + ")");
  }
}

std::size_t required_table_limit(const TheoremParams& params, u64 p) {
  return static_cast<std::size_t>(params.r + params.s + params.t) * p;
}

Residue lhs_naive(const TheoremParams& params, const FactorialTables& tables) {
  require_tables(params, tables, "lhs_naive");
  const PrimePowerModulus& mod = tables.modulus();
  const u64 p = mod.prime();
  const int k = mod.exponent();
  const u64 mk = mod.modulus();
  const std::size_t rp = params.r * p, sp = params.s * p, tp = params.t * p;
  const std::size_t top = rp + sp + tp;

  std::vector<u64> unit(top), inv(top);
  for (std::size_t n = 0; n < top; ++n) {
    unit[n] = tables.units()[n] % mk;
    inv[n] = tables.inverse_units()[n] % mk;
  }
  const std::vector<int>& val = tables.valuations();
  std::vector<u64> shift(k);
  for (int w = 0; w < k; ++w) shift[w] = mod.power(w);

  const bool lazy = mk < kLazyBound;
  std::vector<u64> acc(k);
  u64 total = 0;
  for (std::size_t m1 = 0; m1 < rp; ++m1) {
    for (std::size_t m2 = 0; m2 < sp; ++m2) {
      const std::size_t n = m1 + m2;
      const int outer = val[m1] + val[m2];
      std::fill(acc.begin(), acc.end(), 0);
      // (m1+m2+m3)! / (m1! m2! m3!) = unit(n+m3) inv(m1) inv(m2) inv(m3) p^w
      if (lazy) {
        for (std::size_t block = 0; block < tp; block += kLazyBlock) {
          const std::size_t end = std::min(tp, block + kLazyBlock);
          for (std::size_t m3 = block; m3 < end; ++m3) {
            const int w = val[n + m3] - outer - val[m3];
            if (w < k) acc[w] += unit[n + m3] * inv[m3];
          }
          for (auto& a : acc) a %= mk;
        }
      } else {
        for (std::size_t m3 = 0; m3 < tp; ++m3) {
          const int w = val[n + m3] - outer - val[m3];
          if (w < k) acc[w] = (acc[w] + mul_mod(unit[n + m3], inv[m3], mk)) % mk;
        }
      }
      u64 inner = 0;
      for (int w = 0; w < k; ++w) inner = (inner + mul_mod(acc[w], shift[w], mk)) % mk;
      total = (total + mul_mod(inner, mul_mod(inv[m1], inv[m2], mk), mk)) % mk;
    }
  }
  return Residue::from_unsigned(total, mod);
}

Residue lhs_naive(const TheoremParams& params, const PrimePowerModulus& m) {
  const FactorialTables tables(required_table_limit(params, m.prime()), m);
  return lhs_naive(params, tables);
}

mpz_class rhs_small(const TheoremParams& params) {
  mpz_class triple = 0;
  for (int a = 0; a < params.r; ++a) {
    for (int b = 0; b < params.s; ++b) {
      const mpz_class outer = binomial_exact(a + b, a);
      for (int c = 0; c < params.t; ++c) triple += outer * binomial_exact(a + b + c, c);
    }
  }
  mpq_class closed = 0;
  for (int i = 0; i < params.r; ++i) {
    for (int j = 0; j < params.s; ++j) {
      mpq_class term(binomial_exact(i + j, i) * binomial_exact(i + j + params.t, i + j), mpz_class(i + j + 1));
      term.canonicalize();
      closed += term;
    }
  }
  closed *= params.t;
  if (closed != mpq_class(triple)) {
    throw std::logic_error("rhs_small: triple sum " + triple.get_str() + " disagrees with closed form " +
                           closed.get_str());
  }
  return triple;
}

mpz_class lhs_oracle_exact(const TheoremParams& params, u64 p, u64 bound) {
  if (p < 3 || !is_prime(p)) throw DomainError("lhs_oracle_exact: p = " + std::to_string(p) + " is not an odd prime");
  if (p > bound) {
    throw DomainError("lhs_oracle_exact: p = " + std::to_string(p) + " exceeds the oracle bound " +
                      std::to_string(bound));
  }
  const u64 rp = params.r * p, sp = params.s * p, tp = params.t * p;
  mpz_class total = 0;
  for (u64 m1 = 0; m1 < rp; ++m1) {
    mpz_class b12 = 1;  // binom(m1 + m2, m1)
    for (u64 m2 = 0; m2 < sp; ++m2) {
      const u64 n = m1 + m2;
      mpz_class b3 = 1;  // binom(n + m3, m3)
      mpz_class row = 0;
      for (u64 m3 = 0; m3 < tp; ++m3) {
        row += b3;
        b3 *= n + m3 + 1;
        mpz_divexact_ui(b3.get_mpz_t(), b3.get_mpz_t(), m3 + 1);
      }
      total += b12 * row;
      b12 *= n + 1;
      mpz_divexact_ui(b12.get_mpz_t(), b12.get_mpz_t(), m2 + 1);
    }
  }
  return total;
}

std::vector<DecompositionCell> decompose(const TheoremParams& params, const FactorialTables& tables) {
  require_tables(params, tables, "decompose");
  const PrimePowerModulus& mod = tables.modulus();
  const i64 p = static_cast<i64>(mod.prime());
  const i64 t = params.t;
  auto binom = [&](i64 n, i64 r) { return binomial_padic(n, r, tables); };
  const P tp = P::from_integer(t * p, mod);

  std::vector<DecompositionCell> cells;
  cells.reserve(params.r * params.s);
  for (i64 i = 0; i < params.r; ++i) {
    for (i64 j = 0; j < params.s; ++j) {
      const i64 s = i + j;
      P a = P::zero(mod);
      for (i64 k = 0; k < p; ++k) {
        // tp * binom(k+(s+t)p, k+sp) / (k+sp+1) is shared by every m <= k.
        const P weight = tp * binom(k + (s + t) * p, k + s * p) / P::from_integer(k + s * p + 1, mod);
        for (i64 m = 0; m <= k; ++m) a += weight * binom(k + s * p, m + i * p);
      }

      P row = P::zero(mod);
      for (i64 m = 1; m < p; ++m) row += binom((s + 1) * p, m + i * p);
      const P b = tp / P::from_integer((s + 1) * p + 1, mod) * binom((s + t + 1) * p, (s + 1) * p) * row;

      P c = P::zero(mod);
      for (i64 k = 1; k < p; ++k) {
        const P weight =
            tp * binom(k + (s + t + 1) * p, k + (s + 1) * p) / P::from_integer(k + 1 + (s + 1) * p, mod);
        for (i64 m = k + 1; m < p; ++m) c += weight * binom(k + (s + 1) * p, m + i * p);
      }
      cells.push_back(DecompositionCell{static_cast<int>(i), static_cast<int>(j), a, b, c});
    }
  }
  return cells;
}

CongruenceCheck check_main(const TheoremParams& params, u64 p, int k, int guard) {
  return timed([&] {
    const PrimePowerModulus mod(p, k, guard);
    const Residue lhs = lhs_naive(params, mod);
    const Residue rhs = reduce_exact(rhs_small(params), mod);
    return residue_check("SS", p, rst_params(params), lhs, rhs);
  });
}

CongruenceCheck check_main_oracle(const TheoremParams& params, u64 p, u64 bound) {
  return timed([&] {
    const PrimePowerModulus mod(p, 3);
    const Residue naive = lhs_naive(params, mod);
    const Residue exact = reduce_exact(lhs_oracle_exact(params, p, bound), mod);
    return residue_check("SS.oracle", p, rst_params(params), naive, exact);
  });
}

std::vector<CongruenceCheck> check_decomposition_properties(const TheoremParams& params, u64 p, int guard) {
  if (p <= 3) throw DomainError("check_decomposition_properties: the A/B/C split is analysed for p > 3");
  const PrimePowerModulus mod(p, 3, guard);
  const FactorialTables tables(required_table_limit(params, p), mod);
  const i64 t = params.t;
  const P pp = P::from_integer(static_cast<i64>(p), mod);
  const P q = P::from_residue(fermat_quotient2(mod), mod);

  std::vector<CongruenceCheck> out;
  std::vector<DecompositionCell> cells;
  const auto start = std::chrono::steady_clock::now();
  cells = decompose(params, tables);
  const auto per_cell =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count() /
      static_cast<std::int64_t>(cells.size());

  P sum = P::zero(mod);
  for (const DecompositionCell& cell : cells) {
    const i64 i = cell.i, j = cell.j;
    std::vector<Param> params_ij = rst_params(params);
    params_ij.push_back({"i", i});
    params_ij.push_back({"j", j});

    // 2 t p^2 (i+j+t+1) (i+j+t)! / (i! j! t!) q_p(2)
    const P closed_b =
        P::from_integer(2 * t * (i + j + t + 1), mod) * pp * pp * multinomial_padic(i, j, t, tables) * q;
    const P target_a =
        P::from_rational(t, i + j + 1, mod) * binomial_padic(i + j, i, tables) * binomial_padic(i + j + t, i + j, tables);

    auto record = [&](const char* id, const P& lhs, const P& rhs) {
      CongruenceCheck c = timed([&] { return residue_check(id, p, params_ij, lhs.reduce(), rhs.reduce()); });
      c.micros += per_cell;
      out.push_back(std::move(c));
    };
    record("decomp.B", cell.b, closed_b);
    record("decomp.C", cell.c, -closed_b);
    record("decomp.BC", cell.b + cell.c, P::zero(mod));
    record("decomp.A", cell.a, target_a);
    sum += cell.total();
  }
  out.push_back(timed([&] {
    return residue_check("decomp.sum", p, rst_params(params), sum.reduce(), lhs_naive(params, tables));
  }));
  return out;
}

Residue catalan_mod(u64 n, const FactorialTables& tables) {
  const PrimePowerModulus& mod = tables.modulus();
  const P c = binomial_padic(static_cast<i64>(2 * n), static_cast<i64>(n), tables) /
              P::from_integer(static_cast<i64>(n + 1), mod);
  return c.reduce();
}

Residue catalan_mod(u64 n, const PrimePowerModulus& m) { return catalan_mod(n, FactorialTables(2 * n, m)); }

CongruenceCheck check_remark(int id, u64 p) {
  if (id != 1 && id != 2 && id != 5) throw DomainError("check_remark: unknown remark " + std::to_string(id));
  if (p < 5) throw DomainError("check_remark: the Legendre symbol (p/3) needs p >= 5");
  return timed([&] {
    const PrimePowerModulus mod(p, 2);
    const FactorialTables tables(2 * p, mod);
    const i64 ip = static_cast<i64>(p);
    const int legendre = legendre_symbol_3(p);
    const std::string name = "remark" + std::to_string(id);

    P central = P::zero(mod);  // sum_{n<p} binom(2n, n)
    for (i64 n = 0; n < ip; ++n) central += binomial_padic(2 * n, n, tables);

    if (id == 1) return residue_check(name, p, {}, central.reduce(), Residue(legendre, mod));
    if (id == 2) {
      Residue sum(0, mod);
      for (u64 n = 0; n < p; ++n) sum += catalan_mod(n, tables);
      return residue_check(name, p, {}, sum, Residue((3 * legendre - 1) / 2, mod));
    }
    P squares = P::zero(mod);
    for (i64 n = 0; n < ip; ++n) {
      for (i64 m = 0; m < ip; ++m) {
        const P b = binomial_padic(n + m, m, tables);
        squares += b * b;
      }
    }
    CongruenceCheck c = residue_check(name, p, {}, squares.reduce(), Residue(legendre, mod));
    const Residue reduced = central.reduce();
    if (squares.reduce() != reduced) {
      c.status = CheckStatus::fails;
      c.note = "double sum disagrees with sum binom(2k,k) = " + std::to_string(reduced.value());
    } else {
      c.note = "double sum = sum binom(2k,k) (mod p^2)";
    }
    return c;
  });
}

}  // namespace supercong
