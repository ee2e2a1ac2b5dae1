#pragma once

// Table files and report records.
//
// Table file (UTF-8, LF):
//   #domain=sphere|torus:<R>|free3      (or #domain=torus plus #aspect_ratio=<R>)
//   #potential=log|riesz:<s>|coulomb:<D>|lj
//   #source=<free text>
//   #<other key>=<value>                 kept verbatim
//   N<TAB>E[<TAB>label]
// Lines starting with '#' that hold no '=' are comments. Blank lines are
// ignored. E is decimal text; writers emit at most 15 significant digits
// when that re-parses to the same double, otherwise the shortest exact form.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gsaudit/audit.hpp"
#include "gsaudit/energy_table.hpp"

namespace gsaudit {

struct ParseOptions {
  bool allow_empty = false;
};

EnergyTable parse_table_text(std::string_view text, const ParseOptions& opts = {});
/// Reads a file; the file name is prefixed to error messages.
EnergyTable parse_table(const std::filesystem::path& path, const ParseOptions& opts = {});

std::string write_table(const EnergyTable& t);
void write_table_file(const EnergyTable& t, const std::filesystem::path& path);

/// Decimal text that parses back to exactly `v`.
std::string format_energy(double v);

DomainSpec parse_domain(std::string_view text);
PotentialSpec parse_potential(std::string_view text);

/// "2-6", "2,3,5", "2-6,12" -> ascending distinct list.
std::vector<int> parse_n_list(std::string_view text);

struct ReportRecord {
  std::string type;  // "violation" or "bound"
  int n_base = 0;
  int offset = 0;
  double delta_eps = 0.0;
  double bound = 0.0;
  int witness_n = 0;
  std::string table_digest;
};

/// One record per violation, then one per improved bound. Violation records
/// carry the bound implied by their own n; bound records carry the best one.
std::vector<ReportRecord> report_records(const EnergyTable& t, const AuditReport& r);

/// Single-line JSON object with fields type, N, n, delta_eps, bound, witness_n, table_digest.
std::string to_json_line(const ReportRecord& rec);
ReportRecord parse_json_line(std::string_view line);

}  // namespace gsaudit
