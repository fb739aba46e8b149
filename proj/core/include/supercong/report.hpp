#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "supercong/suite.hpp"

namespace supercong {

/// Column order of the CSV emitter.
inline constexpr const char* kCsvHeader = "id,p,params,lhs,rhs,modulus,holds,micros";

class ReportIOError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON: {config, summary, checks: [...], elapsed_micros}; residues as decimal
/// strings. CSV: kCsvHeader then one row per check. Text: aligned table and a
/// summary line. Records are written one at a time.
void emit_report(const Report& report, OutputFormat format, std::ostream& os);

/// Writes to `path`, or to standard output when `path` is empty. ReportIOError on failure.
void emit_report(const Report& report, OutputFormat format, const std::string& path);

std::string render_report(const Report& report, OutputFormat format);

/// "r=1;s=2;t=3".
std::string format_params(const CongruenceCheck& c);

}  // namespace supercong
