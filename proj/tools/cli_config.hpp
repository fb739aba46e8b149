#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "supercong/suite.hpp"

namespace supercong::cli {

/// Bad command line; the driver exits with status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for --help; carries the help text. The driver prints it and exits 0.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Environment variable consulted for the default worker count.
inline constexpr const char* kThreadsEnv = "SUPERCONG_THREADS";

/// Parses `supercong verify <selection> [flags]` into a validated RunConfig.
/// argv[0] is the program name.
RunConfig parse_config(const std::vector<std::string>& argv);

/// "lo..hi" -> primes in range.
std::vector<u64> parse_prime_range(const std::string& text);
/// "a,b,c" -> odd primes, sorted and deduplicated.
std::vector<u64> parse_prime_list(const std::string& text);

}  // namespace supercong::cli
