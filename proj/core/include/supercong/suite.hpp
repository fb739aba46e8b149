#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "supercong/check.hpp"
#include "supercong/engine.hpp"

namespace supercong {

enum class Selection { all, main, lemmas, known, remarks, identities, decomposition };
enum class OutputFormat { json, csv, text };

std::string_view to_string(Selection s);
std::optional<Selection> parse_selection(std::string_view name);
std::string_view to_string(OutputFormat f);
std::optional<OutputFormat> parse_format(std::string_view name);

struct RunConfig {
  Selection selection = Selection::all;
  std::vector<u64> primes;
  std::vector<TheoremParams> rst_grid;
  /// Exponent requested for the main theorem. Every check still runs at the
  /// modulus its statement carries, so this is validated and echoed only.
  int mod_power = 3;
  int guard = PrimePowerModulus::kDefaultGuard;
  int threads = 1;
  OutputFormat format = OutputFormat::json;
  std::string out_path;  // empty: standard output
  bool oracle = false;
  u64 oracle_bound = 13;
  bool include_p3_diagnostics = false;
  /// Lemma grids run over 0 <= i, j <= ij_max.
  int ij_max = 3;
  /// Exact identities indexed by k run over 1 <= k <= identity_max.
  int identity_max = 40;

  /// Primes 5..101, (r, s, t) in {1,2,3}^3.
  static RunConfig defaults();
};

/// (r, s, t) in {1..n}^3, r varying slowest.
std::vector<TheoremParams> rst_cube(int n);

struct Summary {
  std::size_t total = 0;
  std::size_t holds = 0;
  std::size_t fails = 0;  // non-diagnostic failures only
  std::size_t not_applicable = 0;
  std::size_t diagnostic = 0;

  friend bool operator==(const Summary&, const Summary&) = default;
};

struct Report {
  RunConfig config;
  std::vector<CongruenceCheck> checks;
  Summary summary;
  std::int64_t elapsed_micros = 0;
};

/// An arithmetic error inside one (check, prime, params) tuple.
class SuiteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Summary summarize(const std::vector<CongruenceCheck>& checks);

/// Runs every selected tuple across `config.threads` workers and returns the
/// records in report order. A congruence that fails is data; an arithmetic
/// exception becomes SuiteError naming the tuple.
Report run_suite(const RunConfig& config);

/// 0 when no non-diagnostic check failed, 1 otherwise.
int exit_code(const Report& report);

}  // namespace supercong
