#include <gtest/gtest.h>

#include <algorithm>

#include "supercong/suite.hpp"

using namespace supercong;

namespace {

RunConfig small_config(Selection sel, std::vector<u64> primes) {
  RunConfig cfg = RunConfig::defaults();
  cfg.selection = sel;
  cfg.primes = std::move(primes);
  return cfg;
}

}  // namespace

TEST(Suite, Parsing) {
  EXPECT_EQ(parse_selection("lemmas"), Selection::lemmas);
  EXPECT_FALSE(parse_selection("bogus").has_value());
  EXPECT_EQ(parse_format("csv"), OutputFormat::csv);
  EXPECT_EQ(to_string(Selection::decomposition), "decomposition");
  EXPECT_EQ(rst_cube(2).size(), 8u);
}

TEST(Suite, MainTwoRecords) {
  RunConfig cfg = small_config(Selection::main, {5, 7});
  cfg.rst_grid = {TheoremParams(1, 1, 1)};
  const Report rep = run_suite(cfg);
  ASSERT_EQ(rep.checks.size(), 2u);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.holds());
  EXPECT_EQ(rep.summary.holds, 2u);
  EXPECT_EQ(exit_code(rep), 0);
}

TEST(Suite, LemmasAtFiveAllHold) {
  const Report rep = run_suite(small_config(Selection::lemmas, {5}));
  EXPECT_GT(rep.checks.size(), 100u);
  EXPECT_EQ(rep.summary.fails, 0u);
  for (const auto& c : rep.checks) EXPECT_NE(c.status, CheckStatus::fails) << c.id;
}

TEST(Suite, PrimeThreeDiagnostics) {
  RunConfig cfg = small_config(Selection::lemmas, {3});
  const Report plain = run_suite(cfg);
  EXPECT_EQ(plain.summary.diagnostic, 0u);
  EXPECT_EQ(plain.summary.fails, 0u);
  const auto wol = std::find_if(plain.checks.begin(), plain.checks.end(),
                                [](const CongruenceCheck& c) { return c.id == "wolstenholme"; });
  ASSERT_NE(wol, plain.checks.end());
  EXPECT_EQ(wol->status, CheckStatus::not_applicable);

  cfg.include_p3_diagnostics = true;
  const Report diag = run_suite(cfg);
  EXPECT_GT(diag.summary.diagnostic, 0u);
  EXPECT_EQ(diag.summary.fails, 0u);
  EXPECT_EQ(exit_code(diag), 0);
  const auto hit = std::find_if(diag.checks.begin(), diag.checks.end(), [](const CongruenceCheck& c) {
    return c.id == "wolstenholme" && c.params.size() == 2 && c.params[0].value == 2 && c.params[1].value == 1;
  });
  ASSERT_NE(hit, diag.checks.end());
  EXPECT_EQ(hit->status, CheckStatus::fails);
  EXPECT_TRUE(hit->diagnostic);
}

TEST(Suite, PrimeThreeSkipsDecomposition) {
  RunConfig cfg = small_config(Selection::decomposition, {3});
  cfg.rst_grid = {TheoremParams(1, 1, 1)};
  const Report rep = run_suite(cfg);
  ASSERT_EQ(rep.checks.size(), 1u);
  EXPECT_EQ(rep.checks[0].status, CheckStatus::not_applicable);
}

TEST(Suite, RecordOrderIndependentOfThreads) {
  RunConfig cfg = small_config(Selection::all, {3, 5, 7});
  cfg.rst_grid = rst_cube(2);
  cfg.threads = 1;
  const Report a = run_suite(cfg);
  cfg.threads = 4;
  const Report b = run_suite(cfg);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].id, b.checks[i].id);
    EXPECT_EQ(a.checks[i].prime, b.checks[i].prime);
    EXPECT_EQ(a.checks[i].lhs, b.checks[i].lhs);
  }
  EXPECT_TRUE(std::is_sorted(a.checks.begin(), a.checks.end(), report_order));
  EXPECT_EQ(a.summary, b.summary);
}

TEST(Suite, FailureSetsExitCode) {
  Report rep;
  CongruenceCheck c;
  c.id = "x";
  c.status = CheckStatus::fails;
  rep.checks.push_back(c);
  rep.summary = summarize(rep.checks);
  EXPECT_EQ(exit_code(rep), 1);
  rep.checks[0].diagnostic = true;
  rep.summary = summarize(rep.checks);
  EXPECT_EQ(exit_code(rep), 0);
}
