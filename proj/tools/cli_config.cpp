#include "cli_config.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "CLI11.hpp"
#include "supercong/errors.hpp"
#include "supercong/modulus.hpp"
#include "supercong/primes.hpp"

namespace supercong::cli {

namespace {

u64 parse_unsigned(const std::string& text, const std::string& what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw UsageError(what + ": '" + text + "' is not a non-negative integer");
  }
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw UsageError(what + ": '" + text + "' is out of range");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

}  // namespace

std::vector<u64> parse_prime_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("--primes expects lo..hi, got '" + text + "'");
  const u64 lo = parse_unsigned(text.substr(0, dots), "--primes");
  const u64 hi = parse_unsigned(text.substr(dots + 2), "--primes");
  if (lo < 3) throw UsageError("--primes: lower bound must be >= 3");
  if (lo > hi) throw UsageError("--primes: empty range " + text);
  return primes_in_range(lo, hi);
}

std::vector<u64> parse_prime_list(const std::string& text) {
  std::vector<u64> primes;
  for (const std::string& part : split(text, ',')) {
    const u64 p = parse_unsigned(part, "--prime-list");
    if (p < 3 || !is_prime(p)) throw UsageError("--prime-list: " + part + " is not an odd prime");
    primes.push_back(p);
  }
  if (primes.empty()) throw UsageError("--prime-list: no primes given");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

RunConfig parse_config(const std::vector<std::string>& argv) {
  RunConfig cfg = RunConfig::defaults();
  if (const char* env = std::getenv(kThreadsEnv); env != nullptr && *env != '\0') {
    const u64 n = parse_unsigned(env, kThreadsEnv);
    if (n < 1) throw UsageError(std::string(kThreadsEnv) + " must be >= 1");
    cfg.threads = static_cast<int>(n);
  }

  CLI::App app{"Verify binomial supercongruences and multiple harmonic sum congruences modulo prime powers"};
  app.require_subcommand(1);
  CLI::App* verify = app.add_subcommand("verify", "Run a selection of checks");

  std::string selection;
  std::string prime_range, prime_list, rst, format = "json";
  int rst_max = 3;
  int threads = cfg.threads;
  verify->add_option("selection", selection, "all | main | lemmas | known | remarks | identities | decomposition")
      ->required();
  auto* range_opt = verify->add_option("--primes", prime_range, "Prime range lo..hi (default 5..101)");
  auto* list_opt = verify->add_option("--prime-list", prime_list, "Explicit primes a,b,c");
  range_opt->excludes(list_opt);
  auto* rst_opt = verify->add_option("--rst", rst, "A single box r,s,t");
  auto* rst_max_opt = verify->add_option("--rst-max", rst_max, "Use (r,s,t) in {1..n}^3 (default 3)");
  rst_opt->excludes(rst_max_opt);
  verify->add_option("--mod-power", cfg.mod_power, "Modulus exponent for the main theorem (1..3)");
  verify->add_option("--guard", cfg.guard, "Guard digits for truncated p-adic arithmetic");
  verify->add_option("--threads", threads, std::string("Worker threads (default $") + kThreadsEnv + " or 1)");
  verify->add_option("--format", format, "json | csv | text");
  verify->add_option("--out", cfg.out_path, "Output file (default standard output)");
  verify->add_flag("--oracle", cfg.oracle, "Cross-check the main sum against exact big integers for small p");
  verify->add_option("--oracle-bound", cfg.oracle_bound, "Largest prime the exact oracle is run for");
  verify->add_flag("--include-p3-diagnostics", cfg.include_p3_diagnostics,
                   "Run Wolstenholme at p = 3 as a diagnostic (expected to fail)");
  verify->add_option("--ij-max", cfg.ij_max, "Lemma grids use 0 <= i, j <= n (default 3)");
  verify->add_option("--identity-max", cfg.identity_max, "Exact identities use 1 <= k <= n (default 40)");

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const std::string& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const auto sel = parse_selection(selection);
  if (!sel) throw UsageError("unknown selection '" + selection + "'");
  cfg.selection = *sel;

  try {
    if (!prime_range.empty()) cfg.primes = parse_prime_range(prime_range);
    if (!prime_list.empty()) cfg.primes = parse_prime_list(prime_list);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (cfg.primes.empty()) throw UsageError("no primes selected");

  if (!rst.empty()) {
    const auto parts = split(rst, ',');
    if (parts.size() != 3) throw UsageError("--rst expects r,s,t");
    const u64 r = parse_unsigned(parts[0], "--rst"), s = parse_unsigned(parts[1], "--rst"),
              t = parse_unsigned(parts[2], "--rst");
    if (r < 1 || s < 1 || t < 1 || r > 64 || s > 64 || t > 64) throw UsageError("--rst: entries must be in 1..64");
    cfg.rst_grid = {TheoremParams(static_cast<int>(r), static_cast<int>(s), static_cast<int>(t))};
  } else {
    if (rst_max < 1 || rst_max > 64) throw UsageError("--rst-max must be in 1..64");
    cfg.rst_grid = rst_cube(rst_max);
  }

  if (cfg.mod_power < 1 || cfg.mod_power > 3) throw UsageError("--mod-power must be 1, 2 or 3");
  if (cfg.guard < 0 || cfg.guard > 8) throw UsageError("--guard must be in 0..8");
  if (threads < 1) throw UsageError("--threads must be >= 1");
  cfg.threads = threads;
  const auto fmt = parse_format(format);
  if (!fmt) throw UsageError("--format must be json, csv or text");
  cfg.format = *fmt;
  if (cfg.ij_max < 0 || cfg.ij_max > 16) throw UsageError("--ij-max must be in 0..16");
  if (cfg.identity_max < 1 || cfg.identity_max > 1000) throw UsageError("--identity-max must be in 1..1000");
  return cfg;
}

}  // namespace supercong::cli
