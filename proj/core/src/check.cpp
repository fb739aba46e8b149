#include "supercong/check.hpp"

#include <algorithm>
#include <tuple>

namespace supercong {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds:
      return "holds";
    case CheckStatus::fails:
      return "fails";
    case CheckStatus::not_applicable:
      return "not-applicable";
  }
  return "unknown";
}

CongruenceCheck residue_check(std::string id, u64 prime, std::vector<Param> params, const Residue& lhs,
                              const Residue& rhs) {
  CongruenceCheck c;
  c.id = std::move(id);
  c.prime = prime;
  c.params = std::move(params);
  c.lhs = std::to_string(lhs.value());
  c.rhs = std::to_string(rhs.value());
  c.exponent = lhs.modulus().exponent();
  c.modulus = std::to_string(lhs.modulus().modulus());
  c.status = lhs == rhs ? CheckStatus::holds : CheckStatus::fails;
  return c;
}

CongruenceCheck not_applicable(std::string id, u64 prime, std::vector<Param> params, std::string reason) {
  CongruenceCheck c;
  c.id = std::move(id);
  c.prime = prime;
  c.params = std::move(params);
  c.status = CheckStatus::not_applicable;
  c.note = std::move(reason);
  return c;
}

bool report_order(const CongruenceCheck& a, const CongruenceCheck& b) {
  if (a.id != b.id) return a.id < b.id;
  if (a.prime != b.prime) return a.prime < b.prime;
  return std::lexicographical_compare(
      a.params.begin(), a.params.end(), b.params.begin(), b.params.end(),
      [](const Param& x, const Param& y) { return std::tie(x.value, x.name) < std::tie(y.value, y.name); });
}

}  // namespace supercong
