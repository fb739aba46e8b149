#include <gtest/gtest.h>

#include <cstdlib>

#include "cli_config.hpp"

using namespace supercong;
using supercong::cli::parse_config;
using supercong::cli::UsageError;

namespace {

RunConfig parse(std::vector<std::string> args) {
  args.insert(args.begin(), "supercong");
  return parse_config(args);
}

}  // namespace

TEST(CliConfig, Defaults) {
  unsetenv(cli::kThreadsEnv);
  const RunConfig cfg = parse({"verify", "all"});
  EXPECT_EQ(cfg.selection, Selection::all);
  EXPECT_EQ(cfg.primes.front(), 5u);
  EXPECT_EQ(cfg.primes.back(), 101u);
  EXPECT_EQ(cfg.rst_grid.size(), 27u);
  EXPECT_EQ(cfg.threads, 1);
  EXPECT_EQ(cfg.format, OutputFormat::json);
}

TEST(CliConfig, Flags) {
  const RunConfig cfg = parse({"verify", "main", "--primes", "3..12", "--rst", "1,2,3", "--format", "csv",
                               "--threads", "3", "--oracle", "--mod-power", "2"});
  EXPECT_EQ(cfg.primes, (std::vector<u64>{3, 5, 7, 11}));
  ASSERT_EQ(cfg.rst_grid.size(), 1u);
  EXPECT_EQ(cfg.rst_grid[0], TheoremParams(1, 2, 3));
  EXPECT_EQ(cfg.format, OutputFormat::csv);
  EXPECT_EQ(cfg.threads, 3);
  EXPECT_TRUE(cfg.oracle);
  EXPECT_EQ(cfg.mod_power, 2);
}

TEST(CliConfig, PrimeList) {
  EXPECT_EQ(parse({"verify", "lemmas", "--prime-list", "7,5,7"}).primes, (std::vector<u64>{5, 7}));
  EXPECT_THROW(parse({"verify", "lemmas", "--prime-list", "5,9"}), UsageError);
  EXPECT_THROW(parse({"verify", "lemmas", "--prime-list", "2"}), UsageError);
}

TEST(CliConfig, ThreadsFromEnvironment) {
  setenv(cli::kThreadsEnv, "4", 1);
  EXPECT_EQ(parse({"verify", "all"}).threads, 4);
  EXPECT_EQ(parse({"verify", "all", "--threads", "2"}).threads, 2);
  setenv(cli::kThreadsEnv, "zero", 1);
  EXPECT_THROW(parse({"verify", "all"}), UsageError);
  unsetenv(cli::kThreadsEnv);
}

TEST(CliConfig, UsageErrors) {
  EXPECT_THROW(parse({}), UsageError);
  EXPECT_THROW(parse({"verify"}), UsageError);
  EXPECT_THROW(parse({"verify", "everything"}), UsageError);
  EXPECT_THROW(parse({"verify", "all", "--primes", "2..10"}), UsageError);
  EXPECT_THROW(parse({"verify", "all", "--primes", "10..5"}), UsageError);
  EXPECT_THROW(parse({"verify", "all", "--primes", "8..10"}), UsageError);
  EXPECT_THROW(parse({"verify", "all", "--rst", "1,2"}), UsageError);
  EXPECT_THROW(parse({"verify", "all", "--rst", "0,1,1"}), UsageError);
  EXPECT_THROW(parse({"verify", "all", "--mod-power", "4"}), UsageError);
  EXPECT_THROW(parse({"verify", "all", "--format", "xml"}), UsageError);
  EXPECT_THROW(parse({"verify", "all", "--threads", "0"}), UsageError);
  EXPECT_THROW(parse({"verify", "all", "--bogus"}), UsageError);
  EXPECT_THROW(parse({"verify", "all", "--primes", "5..7", "--prime-list", "5"}), UsageError);
}
