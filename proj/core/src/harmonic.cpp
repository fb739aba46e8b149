#include "supercong/harmonic.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "supercong/errors.hpp"

namespace supercong {

CompositionSignature::CompositionSignature(std::vector<int> slots, i64 x_numerator, i64 x_denominator)
    : slots_(std::move(slots)), x_num_(x_numerator), x_den_(x_denominator) {
  if (slots_.empty()) throw DomainError("CompositionSignature: depth must be >= 1");
  for (int s : slots_) {
    if (s == 0) throw DomainError("CompositionSignature: slots must be nonzero");
  }
  if (x_den_ == 0) throw DivisionByZero("CompositionSignature: x has zero denominator");
  if (x_den_ < 0) {
    x_num_ = -x_num_;
    x_den_ = -x_den_;
  }
  const i64 g = std::gcd(x_num_, x_den_);
  if (g > 1) {
    x_num_ /= g;
    x_den_ /= g;
  }
}

int CompositionSignature::weight() const {
  return std::accumulate(slots_.begin(), slots_.end(), 0, [](int acc, int s) { return acc + std::abs(s); });
}

std::string CompositionSignature::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < slots_.size(); ++i) os << (i ? "," : "") << slots_[i];
  if (x_num_ != 1 || x_den_ != 1) {
    os << ";" << x_num_;
    if (x_den_ != 1) os << "/" << x_den_;
  }
  os << ")";
  return os.str();
}

PrefixTable::PrefixTable(CompositionSignature sig, std::vector<Residue> values)
    : sig_(std::move(sig)), values_(std::move(values)) {}

PrefixTable harmonic_prefix_table(const CompositionSignature& sig, u64 n, const PrimePowerModulus& m) {
  if (n >= m.prime()) {
    throw IndexExceedsPrime("harmonic sum H_" + std::to_string(n) + sig.to_string() + " needs n < p = " +
                            std::to_string(m.prime()));
  }
  const Residue x = mod_inverse(Residue(sig.x_denominator(), m)) * Residue(sig.x_numerator(), m);
  if (!x.is_unit()) throw NotAUnit("harmonic sum: x = " + std::to_string(sig.x_numerator()) + " is not a unit");

  const auto& slots = sig.slots();
  const int depth = sig.depth();
  int max_power = 0;
  for (int s : slots) max_power = std::max(max_power, std::abs(s));

  // partial[d]: sum over k_1 < ... < k_d <= current k of the first d factors.
  std::vector<Residue> partial(depth + 1, Residue(0, m));
  partial[0] = Residue(1, m);
  std::vector<Residue> inverse_powers(max_power + 1, Residue(1, m));
  Residue x_power(1, m);

  std::vector<Residue> values;
  values.reserve(n + 1);
  values.push_back(Residue(0, m));
  for (u64 k = 1; k <= n; ++k) {
    x_power *= x;
    const Residue inv_k = mod_inverse(Residue::from_unsigned(k, m));
    for (int e = 1; e <= max_power; ++e) inverse_powers[e] = inverse_powers[e - 1] * inv_k;
    for (int d = depth; d >= 1; --d) {
      const int s = slots[d - 1];
      Residue term = inverse_powers[std::abs(s)];
      if (s < 0) term *= x_power;
      partial[d] += partial[d - 1] * term;
    }
    values.push_back(partial[depth]);
  }
  return PrefixTable(sig, std::move(values));
}

Residue harmonic_sum(const CompositionSignature& sig, u64 n, const PrimePowerModulus& m) {
  return harmonic_prefix_table(sig, n, m)[n];
}

}  // namespace supercong
