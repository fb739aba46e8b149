#pragma once

#include <string>
#include <vector>

#include "supercong/modulus.hpp"
#include "supercong/residue.hpp"

namespace supercong {

/// Index of a multiple harmonic sum H_n(s; x): nonzero integers s_1..s_r and a
/// rational x = num/den that enters exactly the slots with s_i < 0.
class CompositionSignature {
 public:
  CompositionSignature(std::vector<int> slots, i64 x_numerator = 1, i64 x_denominator = 1);

  const std::vector<int>& slots() const { return slots_; }
  int depth() const { return static_cast<int>(slots_.size()); }
  int weight() const;
  i64 x_numerator() const { return x_num_; }
  i64 x_denominator() const { return x_den_; }

  /// "(1,-1;2)" style, x omitted when 1.
  std::string to_string() const;

 private:
  std::vector<int> slots_;
  i64 x_num_;
  i64 x_den_;
};

/// H_0, ..., H_n of one signature modulo p^k.
class PrefixTable {
 public:
  PrefixTable(CompositionSignature sig, std::vector<Residue> values);

  const CompositionSignature& signature() const { return sig_; }
  u64 size() const { return values_.size() - 1; }
  /// H_m(s; x); m = 0 gives the empty sum.
  const Residue& operator[](u64 m) const { return values_.at(m); }

 private:
  CompositionSignature sig_;
  std::vector<Residue> values_;  // values_[m] = H_m
};

/// sum over 1 <= k_1 < ... < k_r <= n of prod_i x_i^(k_i) / k_i^|s_i|, modulo p^k.
/// IndexExceedsPrime when n >= p; NotAUnit when x is not a p-adic unit.
Residue harmonic_sum(const CompositionSignature& sig, u64 n, const PrimePowerModulus& m);

/// Every prefix H_0..H_n from the same O(depth * n) sweep.
PrefixTable harmonic_prefix_table(const CompositionSignature& sig, u64 n, const PrimePowerModulus& m);

}  // namespace supercong
