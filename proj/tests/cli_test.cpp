#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(SUPERCONG_BIN) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, SuccessExitsZero) {
  EXPECT_EQ(run("verify main --primes 5..13 --rst 2,1,1"), 0);
  EXPECT_EQ(run("verify remarks --prime-list 5,7 --format text"), 0);
}

TEST(Cli, DiagnosticsDoNotFail) {
  EXPECT_EQ(run("verify lemmas --primes 3..3 --include-p3-diagnostics"), 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("verify"), 2);
  EXPECT_EQ(run("verify nothing"), 2);
  EXPECT_EQ(run("verify all --primes 1..5"), 2);
  EXPECT_EQ(run("verify all --unknown-flag"), 2);
  EXPECT_EQ(run("verify all --format yaml"), 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run("--help"), 0); }

TEST(Cli, IoErrorExitsThree) { EXPECT_EQ(run("verify main --primes 5..5 --out /nonexistent-dir/x.json"), 3); }

TEST(Cli, WritesCsvFile) {
  const std::string path = "cli_test_out.csv";
  ASSERT_EQ(run("verify main --primes 5..7 --rst 1,1,1 --format csv --out " + path), 0);
  const std::string csv = slurp(path);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "id,p,params,lhs,rhs,modulus,holds,micros");
  std::remove(path.c_str());
}
