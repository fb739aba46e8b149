#include "supercong/suite.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <memory>

#include <omp.h>

#include "supercong/errors.hpp"
#include "supercong/identities.hpp"
#include "supercong/lemmas.hpp"
#include "supercong/primes.hpp"

namespace supercong {

std::string_view to_string(Selection s) {
  switch (s) {
    case Selection::all: return "all";
    case Selection::main: return "main";
    case Selection::lemmas: return "lemmas";
    case Selection::known: return "known";
    case Selection::remarks: return "remarks";
    case Selection::identities: return "identities";
    case Selection::decomposition: return "decomposition";
  }
  return "unknown";
}

std::optional<Selection> parse_selection(std::string_view name) {
  for (Selection s : {Selection::all, Selection::main, Selection::lemmas, Selection::known, Selection::remarks,
                      Selection::identities, Selection::decomposition}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::text: return "text";
  }
  return "unknown";
}

std::optional<OutputFormat> parse_format(std::string_view name) {
  for (OutputFormat f : {OutputFormat::json, OutputFormat::csv, OutputFormat::text}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::vector<TheoremParams> rst_cube(int n) {
  std::vector<TheoremParams> grid;
  for (int r = 1; r <= n; ++r)
    for (int s = 1; s <= n; ++s)
      for (int t = 1; t <= n; ++t) grid.emplace_back(r, s, t);
  return grid;
}

RunConfig RunConfig::defaults() {
  RunConfig c;
  c.primes = primes_in_range(5, 101);
  c.rst_grid = rst_cube(3);
  return c;
}

Summary summarize(const std::vector<CongruenceCheck>& checks) {
  Summary s;
  s.total = checks.size();
  for (const CongruenceCheck& c : checks) {
    if (c.diagnostic) {
      ++s.diagnostic;
      continue;
    }
    switch (c.status) {
      case CheckStatus::holds: ++s.holds; break;
      case CheckStatus::fails: ++s.fails; break;
      case CheckStatus::not_applicable: ++s.not_applicable; break;
    }
  }
  return s;
}

int exit_code(const Report& report) { return report.summary.fails == 0 ? 0 : 1; }

namespace {

using Records = std::vector<CongruenceCheck>;

struct Task {
  std::string label;
  std::function<Records()> run;
};

bool wants(Selection chosen, Selection group) { return chosen == Selection::all || chosen == group; }

std::string rst_label(const TheoremParams& x) {
  return "(r,s,t)=(" + std::to_string(x.r) + "," + std::to_string(x.s) + "," + std::to_string(x.t) + ")";
}

Records single(CongruenceCheck c) {
  Records out;
  out.push_back(std::move(c));
  return out;
}

void add_known(std::vector<Task>& tasks, u64 p, const std::shared_ptr<const LemmaContext>& ctx) {
  tasks.push_back({"known p=" + std::to_string(p), [p, ctx] {
                     Records out;
                     for (std::string_view id : known_fact_ids()) {
                       out.push_back(p > 3 ? check_known_mhs(id, *ctx)
                                           : not_applicable(std::string(id), p, {}, "stated for p > 3"));
                     }
                     return out;
                   }});
}

void add_lemmas(std::vector<Task>& tasks, const RunConfig& cfg, u64 p, const std::shared_ptr<const LemmaContext>& ctx) {
  const int n = cfg.ij_max;
  const int ip = static_cast<int>(p);
  const std::string at = " p=" + std::to_string(p);
  auto add = [&](std::string label, std::function<Records()> fn) { tasks.push_back({label + at, std::move(fn)}); };

  if (p > 3) {
    add("B1", [ctx] { return single(check_lemma1("B1", *ctx)); });
    add("B2", [ctx] { return single(check_lemma1("B2", *ctx)); });
    add("C7", [ctx] { return single(check_c7(*ctx)); });
    add("aux.H_weighted", [ctx] { return single(check_aux_lemma3_sums("H-weighted", *ctx)); });
    add("aux.inv_r", [ctx] { return single(check_aux_lemma3_sums("inv-r", *ctx)); });
    add("CC22", [ctx, n, ip] {
      Records out;
      for (int i = 0; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (int r = 1; r < ip; ++r) out.push_back(check_cc22(*ctx, i, j, r));
      return out;
    });
    add("CC2", [ctx, n] {
      Records out;
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) out.push_back(check_cc2(*ctx, i, j));
      return out;
    });
  } else {
    add("p3", [p] {
      Records out;
      for (const char* id : {"B1", "B2", "C7", "CC2", "CC22", "aux.H_weighted", "aux.inv_r"}) {
        out.push_back(not_applicable(id, p, {}, "stated for p > 3"));
      }
      return out;
    });
  }

  add("binom_p_r", [ctx, ip] {
    Records out;
    for (int r = 1; r < ip; ++r) out.push_back(check_binom_p_r_expansion(*ctx, r));
    return out;
  });
  for (int i = 0; i <= n; ++i) {
    add("CC1 i=" + std::to_string(i), [ctx, n, ip, i] {
      Records out;
      for (int j = 0; j <= n; ++j)
        for (int k = 0; k < ip; ++k)
          for (int m = 0; m <= k; ++m) out.push_back(check_cc1(*ctx, i, j, k, m));
      return out;
    });
  }
  add("CC11", [ctx, n, ip] {
    Records out;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        for (int k = 0; k < ip; ++k) out.push_back(check_cc11(*ctx, i, j, k));
    return out;
  });
  for (int n1 = 0; n1 < 4; ++n1) {
    add("lucas n1=" + std::to_string(n1), [ctx, ip, n1] {
      Records out;
      for (int k1 = 0; k1 < 4; ++k1)
        for (int n0 = 0; n0 < ip; ++n0)
          for (int k0 = 0; k0 < ip; ++k0) out.push_back(check_lucas(*ctx, n1, n0, k1, k0));
      return out;
    });
  }
  const bool diag = cfg.include_p3_diagnostics;
  add("wolstenholme", [ctx, n, p, diag] {
    Records out;
    if (p < 5 && !diag) {
      out.push_back(not_applicable("wolstenholme", p, {}, "needs p >= 5; see --include-p3-diagnostics"));
      return out;
    }
    for (int a = 0; a <= 2 * n; ++a)
      for (int b = 0; b <= a; ++b) out.push_back(check_wolstenholme(*ctx, a, b, diag));
    return out;
  });
  add("power_expansion", [ctx, n, p] {
    Records out;
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        if ((i + j + 1) % static_cast<int>(p) == 0) {
          out.push_back(not_applicable("power_expansion", p, {{"i", i}, {"j", j}}, "p divides i+j+1"));
        } else {
          out.push_back(check_power_expansion(*ctx, i, j));
        }
      }
    }
    return out;
  });
}

std::vector<Task> plan(const RunConfig& cfg) {
  std::vector<Task> tasks;
  const Selection sel = cfg.selection;

  if (wants(sel, Selection::known) || wants(sel, Selection::lemmas)) {
    for (u64 p : cfg.primes) {
      auto ctx = std::make_shared<const LemmaContext>(p, cfg.ij_max, cfg.guard);
      if (wants(sel, Selection::known)) add_known(tasks, p, ctx);
      if (wants(sel, Selection::lemmas)) add_lemmas(tasks, cfg, p, ctx);
    }
  }

  if (wants(sel, Selection::identities)) {
    for (std::string_view id : exact_identity_ids()) {
      if (identity_takes_prime(id)) {
        for (u64 p : cfg.primes) {
          tasks.push_back({std::string(id) + " p=" + std::to_string(p),
                           [id, p] { return single(check_exact_identity(id, p)); }});
        }
      } else {
        for (int k = 1; k <= cfg.identity_max; ++k) {
          tasks.push_back({std::string(id) + " k=" + std::to_string(k),
                           [id, k] { return single(check_exact_identity(id, static_cast<u64>(k))); }});
        }
      }
    }
  }

  if (wants(sel, Selection::remarks)) {
    for (u64 p : cfg.primes) {
      tasks.push_back({"remarks p=" + std::to_string(p), [p] {
                         Records out;
                         for (int id : {1, 2, 5}) {
                           out.push_back(p >= 5 ? check_remark(id, p)
                                                : not_applicable("remark" + std::to_string(id), p, {},
                                                                 "(p/3) is undefined for p = 3"));
                         }
                         return out;
                       }});
    }
  }

  if (wants(sel, Selection::main)) {
    for (u64 p : cfg.primes) {
      for (const TheoremParams& x : cfg.rst_grid) {
        const bool oracle = cfg.oracle && p <= cfg.oracle_bound;
        const u64 bound = cfg.oracle_bound;
        const int guard = cfg.guard;
        tasks.push_back({"SS p=" + std::to_string(p) + " " + rst_label(x), [p, x, oracle, bound, guard] {
                           Records out = single(check_main(x, p, 3, guard));
                           if (oracle) out.push_back(check_main_oracle(x, p, bound));
                           return out;
                         }});
      }
    }
  }

  if (wants(sel, Selection::decomposition)) {
    for (u64 p : cfg.primes) {
      for (const TheoremParams& x : cfg.rst_grid) {
        const int guard = cfg.guard;
        tasks.push_back({"decomposition p=" + std::to_string(p) + " " + rst_label(x), [p, x, guard] {
                           if (p <= 3) {
                             return single(not_applicable("decomp", p, {{"r", x.r}, {"s", x.s}, {"t", x.t}},
                                                          "the A/B/C split is analysed for p > 3"));
                           }
                           return check_decomposition_properties(x, p, guard);
                         }});
      }
    }
  }
  return tasks;
}

}  // namespace

Report run_suite(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  if (config.threads < 1) throw DomainError("run_suite: thread count must be >= 1");
  std::vector<Task> tasks;
  try {
    tasks = plan(config);
  } catch (const std::exception& e) {
    throw SuiteError(std::string("planning: ") + e.what());
  }

  std::vector<Records> results(tasks.size());
  std::vector<std::string> errors(tasks.size());
  const long count = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(config.threads)
  for (long i = 0; i < count; ++i) {
    try {
      results[i] = tasks[i].run();
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (!errors[i].empty()) throw SuiteError(tasks[i].label + ": " + errors[i]);
  }

  Report report;
  report.config = config;
  std::size_t total = 0;
  for (const Records& r : results) total += r.size();
  report.checks.reserve(total);
  for (Records& r : results) {
    std::move(r.begin(), r.end(), std::back_inserter(report.checks));
    Records().swap(r);
  }
  std::stable_sort(report.checks.begin(), report.checks.end(), report_order);
  report.summary = summarize(report.checks);
  report.elapsed_micros =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace supercong
