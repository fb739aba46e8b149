#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "supercong/modulus.hpp"
#include "supercong/residue.hpp"

namespace supercong {

enum class CheckStatus { holds, fails, not_applicable };

std::string_view to_string(CheckStatus s);

struct Param {
  std::string name;
  i64 value;

  friend bool operator==(const Param&, const Param&) = default;
};

/// One verified congruence instance with both sides materialized.
///
/// Residues are stored as decimal strings so the record does not depend on
/// the lifetime of any modulus object; exact identities store rationals and
/// use exponent 0 with modulus "exact".
struct CongruenceCheck {
  std::string id;
  u64 prime = 0;
  std::vector<Param> params;
  std::string lhs;
  std::string rhs;
  int exponent = 0;
  std::string modulus;
  CheckStatus status = CheckStatus::not_applicable;
  /// Diagnostic records are reported but never count as failures.
  bool diagnostic = false;
  std::int64_t micros = 0;
  std::string note;

  bool holds() const { return status == CheckStatus::holds; }
};

/// holds iff lhs == rhs as residues modulo p^k.
CongruenceCheck residue_check(std::string id, u64 prime, std::vector<Param> params, const Residue& lhs,
                              const Residue& rhs);

CongruenceCheck not_applicable(std::string id, u64 prime, std::vector<Param> params, std::string reason);

/// Report order: check id, then prime, then parameter values.
bool report_order(const CongruenceCheck& a, const CongruenceCheck& b);

/// Runs `fn` and stamps the elapsed wall time on the returned record.
template <typename Fn>
CongruenceCheck timed(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  CongruenceCheck c = fn();
  c.micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  return c;
}

}  // namespace supercong
