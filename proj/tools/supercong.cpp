// supercong: command-line driver for the congruence verification suite.
//
// Exit status: 0 every applicable check holds, 1 some check failed,
// 2 usage error, 3 internal arithmetic or I/O error.

#include <iostream>
#include <string>
#include <vector>

#include "cli_config.hpp"
#include "supercong/report.hpp"
#include "supercong/suite.hpp"

int main(int argc, char** argv) {
  using namespace supercong;
  RunConfig config;
  try {
    config = cli::parse_config(std::vector<std::string>(argv, argv + argc));
  } catch (const cli::HelpRequested& h) {
    std::cout << h.what();
    return 0;
  } catch (const cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    const Report report = run_suite(config);
    emit_report(report, config.format, config.out_path);
    const Summary& s = report.summary;
    std::cerr << s.total << " checks: " << s.holds << " hold, " << s.fails << " fail, " << s.not_applicable
              << " not applicable, " << s.diagnostic << " diagnostic\n";
    return exit_code(report);
  } catch (const SuiteError& e) {
    std::cerr << "internal error in " << e.what() << "\n";
  } catch (const ReportIOError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
  }
  return 3;
}
