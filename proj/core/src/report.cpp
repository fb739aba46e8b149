#include "supercong/report.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace supercong {

namespace {

using json = nlohmann::ordered_json;

json config_json(const RunConfig& c) {
  json rst = json::array();
  for (const TheoremParams& x : c.rst_grid) rst.push_back({x.r, x.s, x.t});
  // Thread count and output destination are omitted so reports compare equal across runs.
  return json{{"selection", to_string(c.selection)},
              {"primes", c.primes},
              {"rst", rst},
              {"mod_power", c.mod_power},
              {"guard", c.guard},
              {"oracle", c.oracle},
              {"oracle_bound", c.oracle_bound},
              {"include_p3_diagnostics", c.include_p3_diagnostics},
              {"ij_max", c.ij_max},
              {"identity_max", c.identity_max}};
}

json summary_json(const Summary& s) {
  return json{{"total", s.total},
              {"holds", s.holds},
              {"fails", s.fails},
              {"not_applicable", s.not_applicable},
              {"diagnostic", s.diagnostic}};
}

json check_json(const CongruenceCheck& c) {
  json params = json::object();
  for (const Param& p : c.params) params[p.name] = p.value;
  json j{{"id", c.id},
         {"p", c.prime},
         {"params", params},
         {"lhs", c.lhs},
         {"rhs", c.rhs},
         {"modulus", c.modulus},
         {"status", to_string(c.status)},
         {"holds", c.holds()},
         {"diagnostic", c.diagnostic},
         {"micros", c.micros}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

std::string holds_cell(const CongruenceCheck& c) {
  if (c.status == CheckStatus::not_applicable) return "n/a";
  return c.holds() ? "true" : "false";
}

void emit_json(const Report& r, std::ostream& os) {
  os << "{\"config\":" << config_json(r.config).dump() << ",\n\"summary\":" << summary_json(r.summary).dump()
     << ",\n\"checks\":[";
  bool first = true;
  for (const CongruenceCheck& c : r.checks) {
    os << (first ? "\n" : ",\n") << check_json(c).dump();
    first = false;
  }
  os << "\n],\n\"elapsed_micros\":" << r.elapsed_micros << "}\n";
}

void emit_csv(const Report& r, std::ostream& os) {
  os << kCsvHeader << "\n";
  for (const CongruenceCheck& c : r.checks) {
    os << c.id << "," << c.prime << "," << format_params(c) << "," << c.lhs << "," << c.rhs << "," << c.modulus << ","
       << holds_cell(c) << "," << c.micros << "\n";
  }
}

void emit_text(const Report& r, std::ostream& os) {
  const std::array<std::string, 8> header = {"id", "p", "params", "lhs", "rhs", "modulus", "status", "micros"};
  std::vector<std::array<std::string, 8>> rows;
  rows.reserve(r.checks.size());
  for (const CongruenceCheck& c : r.checks) {
    std::string status(to_string(c.status));
    if (c.diagnostic) status += " (diagnostic)";
    rows.push_back({c.id, std::to_string(c.prime), format_params(c), c.lhs, c.rhs, c.modulus, status,
                    std::to_string(c.micros)});
  }
  std::array<std::size_t, 8> width{};
  for (std::size_t i = 0; i < 8; ++i) width[i] = header[i].size();
  for (const auto& row : rows)
    for (std::size_t i = 0; i < 8; ++i) width[i] = std::max(width[i], row[i].size());
  auto line = [&](const std::array<std::string, 8>& row) {
    for (std::size_t i = 0; i < 8; ++i) {
      os << std::left << std::setw(static_cast<int>(width[i])) << row[i] << (i + 1 < 8 ? "  " : "\n");
    }
  };
  line(header);
  for (const auto& row : rows) line(row);
  const Summary& s = r.summary;
  os << "total " << s.total << ": " << s.holds << " holds, " << s.fails << " fails, " << s.not_applicable
     << " not-applicable, " << s.diagnostic << " diagnostic; " << r.elapsed_micros << " us\n";
}

}  // namespace

std::string format_params(const CongruenceCheck& c) {
  std::string out;
  for (const Param& p : c.params) {
    if (!out.empty()) out += ";";
    out += p.name + "=" + std::to_string(p.value);
  }
  return out;
}

void emit_report(const Report& report, OutputFormat format, std::ostream& os) {
  switch (format) {
    case OutputFormat::json: emit_json(report, os); break;
    case OutputFormat::csv: emit_csv(report, os); break;
    case OutputFormat::text: emit_text(report, os); break;
  }
}

void emit_report(const Report& report, OutputFormat format, const std::string& path) {
  if (path.empty()) {
    emit_report(report, format, std::cout);
    std::cout.flush();
    if (!std::cout) throw ReportIOError("emit_report: failed writing to standard output");
    return;
  }
  std::ofstream out(path);
  if (!out) throw ReportIOError("emit_report: cannot open '" + path + "' for writing");
  emit_report(report, format, out);
  out.flush();
  if (!out) throw ReportIOError("emit_report: write to '" + path + "' failed");
}

std::string render_report(const Report& report, OutputFormat format) {
  std::ostringstream os;
  emit_report(report, format, os);
  return os.str();
}

}  // namespace supercong
