#pragma once

#include <array>
#include <memory>
#include <string_view>
#include <vector>

#include "supercong/check.hpp"
#include "supercong/factorial.hpp"
#include "supercong/harmonic.hpp"
#include "supercong/modulus.hpp"

namespace supercong {

/// Per-prime state shared by all lemma checkers: moduli p, p^2, p^3, their
/// factorial tables, the prefixes H_m(1) and q_p(2).
///
/// Tables cover binomials with top index below (2 * ij_max + 2) * p, enough
/// for every grid the checkers are driven with when i, j <= ij_max.
class LemmaContext {
 public:
  explicit LemmaContext(u64 p, int ij_max = 3, int guard = PrimePowerModulus::kDefaultGuard);

  u64 prime() const { return p_; }
  int ij_max() const { return ij_max_; }
  /// k in 1..3.
  const PrimePowerModulus& modulus(int k) const { return levels_.at(k - 1).mod; }
  const FactorialTables& tables(int k) const { return levels_.at(k - 1).tables; }
  /// H_m(1) for 0 <= m <= p - 1, modulo p^k.
  const PrefixTable& harmonic(int k) const { return levels_.at(k - 1).harmonic; }
  /// q_p(2) modulo p^k.
  const Residue& fermat_quotient(int k) const { return levels_.at(k - 1).q; }

 private:
  struct Level {
    PrimePowerModulus mod;
    FactorialTables tables;
    PrefixTable harmonic;
    Residue q;
  };

  u64 p_;
  int ij_max_;
  std::vector<Level> levels_;
};

/// Identifiers of the ten known multiple-harmonic-sum congruences, in the order they are stated.
const std::array<std::string_view, 10>& known_fact_ids();

/// Known fact `id` at p > 3: the harmonic sum against its q_p(2) closed form.
CongruenceCheck check_known_mhs(std::string_view id, const LemmaContext& ctx);

/// id "B1" or "B2": the two nested sums with weights 2^k.
CongruenceCheck check_lemma1(std::string_view id, const LemmaContext& ctx);

/// sum_{k=2}^{p-1} k^-2 sum_{m=k}^{p-1} (-1)^(m-k) / binom(m, k) = -2 q_p(2) (mod p).
CongruenceCheck check_c7(const LemmaContext& ctx);

/// binom((i+j)p, r+ip) against binom(i+j,i) binom(p,r) j (1 - p((i+j-1) H_{r-1} + i/r)) mod p^3.
CongruenceCheck check_cc22(const LemmaContext& ctx, int i, int j, int r);

/// binom(p, r) = p (-1)^(r-1) / r (1 - p H_{r-1}) (mod p^3), 0 < r < p.
CongruenceCheck check_binom_p_r_expansion(const LemmaContext& ctx, int r);

/// sum_{m<p} binom(p-1+(i+j)p, m+ip) against the q_p(2) expansion, mod p^3.
CongruenceCheck check_cc2(const LemmaContext& ctx, int i, int j);

/// id "H-weighted" or "inv-r": the double sums over binom(p-1,l) binom(p,r), mod p^2.
CongruenceCheck check_aux_lemma3_sums(std::string_view id, const LemmaContext& ctx);

/// binom(k+(i+j)p, m+ip) mod p^2 for 0 <= m <= k < p.
CongruenceCheck check_cc1(const LemmaContext& ctx, int i, int j, int k, int m);

/// sum_{m<=k} binom(k+(i+j)p, m+ip) mod p^2 for 0 <= k < p.
CongruenceCheck check_cc11(const LemmaContext& ctx, int i, int j, int k);

/// binom(ap, bp) = binom(a, b) (mod p^3). Rejects p = 3 unless `diagnostic`,
/// in which case the record is flagged diagnostic and may fail.
CongruenceCheck check_wolstenholme(const LemmaContext& ctx, int a, int b, bool diagnostic = false);

/// binom(n1 p + n0, k1 p + k0) = binom(n1, k1) binom(n0, k0) (mod p), n0, k0 < p.
CongruenceCheck check_lucas(const LemmaContext& ctx, int n1, int n0, int k1, int k0);

/// (2^(p-1))^n / n = 1/n + p q + (n-1)/2 p^2 q^2 (mod p^3), n = i+j+1.
/// NonUnitDenominator when p divides n.
CongruenceCheck check_power_expansion(const LemmaContext& ctx, int i, int j);

}  // namespace supercong
