#include "gsaudit/table_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "gsaudit/errors.hpp"
#include "json.hpp"

namespace gsaudit {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::optional<double> to_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<int> to_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

constexpr const char* kValidDomains = "sphere, torus:<ratio>, free3";
constexpr const char* kValidPotentials = "log, riesz:<s>, coulomb:<D>, lj";

std::string domain_text(const DomainSpec& d) {
  if (d.kind == DomainKind::Torus2) return "torus:" + format_energy(d.aspect_ratio);
  return to_string(d);
}

std::string potential_text(const PotentialSpec& p) {
  if (p.kind == PotentialKind::Riesz) return "riesz:" + format_energy(p.s);
  return to_string(p);
}

}  // namespace

std::string format_energy(double v) {
  if (!std::isfinite(v)) throw ValidationError("cannot serialise a non-finite energy");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  if (to_double(buf) == v) return buf;
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

DomainSpec parse_domain(std::string_view text) {
  text = trim(text);
  if (text == "sphere") return DomainSpec::sphere();
  if (text == "free3") return DomainSpec::free3();
  if (text.starts_with("torus:")) {
    const auto r = to_double(text.substr(6));
    if (!r) throw ValidationError("bad torus aspect ratio in '" + std::string(text) + "'");
    return DomainSpec::torus(*r);
  }
  throw ValidationError("unknown domain '" + std::string(text) + "'; valid values: " + kValidDomains);
}

PotentialSpec parse_potential(std::string_view text) {
  text = trim(text);
  if (text == "log") return PotentialSpec::log_coulomb();
  if (text == "lj") return PotentialSpec::lennard_jones();
  if (text.starts_with("riesz:")) {
    const auto s = to_double(text.substr(6));
    if (!s) throw ValidationError("bad Riesz exponent in '" + std::string(text) + "'");
    return PotentialSpec::riesz(*s);
  }
  if (text.starts_with("coulomb:")) {
    const auto d = to_int(text.substr(8));
    if (!d) throw ValidationError("bad Coulomb dimension in '" + std::string(text) + "'");
    return PotentialSpec::coulomb_dim(*d);
  }
  throw ValidationError("unknown potential '" + std::string(text) + "'; valid values: " + kValidPotentials);
}

EnergyTable parse_table_text(std::string_view text, const ParseOptions& opts) {
  EnergyTable table;
  TableMetadata& meta = table.metadata();
  std::string domain_value;
  std::optional<double> aspect_ratio;
  int line_no = 0;
  int header_line = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '#') {
      const std::string_view body = line.substr(1);
      const auto eq = body.find('=');
      if (eq == std::string_view::npos) continue;
      const std::string key(trim(body.substr(0, eq)));
      const std::string value(trim(body.substr(eq + 1)));
      try {
        if (key == "domain") {
          domain_value = value;
          header_line = line_no;
        } else if (key == "aspect_ratio") {
          aspect_ratio = to_double(value);
          if (!aspect_ratio) throw ValidationError("aspect_ratio must be a number");
        } else if (key == "potential") {
          meta.potential = parse_potential(value);
        } else if (key == "source") {
          meta.source = value;
        } else {
          meta.extra[key] = value;
        }
      } catch (const ValidationError& e) {
        throw ParseError(e.what(), line_no);
      }
      continue;
    }

    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw ParseError("expected N<TAB>E", line_no);
    const std::string_view rest = line.substr(tab + 1);
    const auto tab2 = rest.find('\t');
    const auto n = to_int(line.substr(0, tab));
    const auto e = to_double(rest.substr(0, tab2));
    if (!n) throw ParseError("N is not an integer", line_no);
    if (!e || !std::isfinite(*e)) throw ParseError("E is not a finite decimal number", line_no);
    if (*n < 2) throw ParseError("N must be >= 2, got " + std::to_string(*n), line_no);
    std::string label = tab2 == std::string_view::npos ? std::string{} : std::string(trim(rest.substr(tab2 + 1)));
    table.insert(*n, *e, std::move(label));
  }

  try {
    if (domain_value == "torus") {
      if (!aspect_ratio) throw ValidationError("domain=torus needs an aspect_ratio header");
      meta.domain = DomainSpec::torus(*aspect_ratio);
    } else if (!domain_value.empty()) {
      meta.domain = parse_domain(domain_value);
    }
    if (meta.domain && meta.potential) validate_combination(*meta.domain, *meta.potential);
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), header_line);
  }

  if (table.empty() && !opts.allow_empty) throw ParseError("no rows");
  return table;
}

EnergyTable parse_table(const std::filesystem::path& path, const ParseOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_table_text(buf.str(), opts);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string write_table(const EnergyTable& t) {
  std::string out;
  const TableMetadata& meta = t.metadata();
  if (meta.domain) out += "#domain=" + domain_text(*meta.domain) + "\n";
  if (meta.potential) out += "#potential=" + potential_text(*meta.potential) + "\n";
  if (!meta.source.empty()) out += "#source=" + meta.source + "\n";
  for (const auto& [k, v] : meta.extra) out += "#" + k + "=" + v + "\n";
  for (const auto& [n, entry] : t.rows()) {
    out += std::to_string(n);
    out += '\t';
    out += format_energy(entry.energy);
    if (!entry.label.empty()) {
      out += '\t';
      out += entry.label;
    }
    out += '\n';
  }
  return out;
}

void write_table_file(const EnergyTable& t, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write " + path.string());
  out << write_table(t);
  if (!out) throw ParseError("write failed for " + path.string());
}

std::vector<int> parse_n_list(std::string_view text) {
  std::set<int> ns;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string_view item =
        trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    pos = comma == std::string_view::npos ? text.size() + 1 : comma + 1;
    if (item.empty()) throw ValidationError("empty item in N list '" + std::string(text) + "'");

    const auto dash = item.find('-', 1);
    if (dash == std::string_view::npos) {
      const auto n = to_int(item);
      if (!n) throw ValidationError("bad N '" + std::string(item) + "'");
      ns.insert(*n);
      continue;
    }
    const auto lo = to_int(item.substr(0, dash));
    const auto hi = to_int(item.substr(dash + 1));
    if (!lo || !hi || *lo > *hi) throw ValidationError("bad N range '" + std::string(item) + "'");
    for (int n = *lo; n <= *hi; ++n) ns.insert(n);
  }
  return {ns.begin(), ns.end()};
}

std::vector<ReportRecord> report_records(const EnergyTable& t, const AuditReport& r) {
  std::vector<ReportRecord> out;
  out.reserve(r.violations.size() + r.improved_bounds.size());
  for (const Violation& v : r.violations) {
    const int m = v.n_base + v.offset;
    const double pairs = static_cast<double>(v.n_base) * static_cast<double>(v.n_base - 1);
    out.push_back({"violation", v.n_base, v.offset, v.delta_eps, pairs * pair_specific(m, t.energy(m)),
                   v.offset, r.table_digest});
  }
  for (const auto& [n, b] : r.improved_bounds) {
    const int m = n + b.witness_n;
    const double delta = pair_specific(m, t.energy(m)) - pair_specific(n, t.energy(n));
    out.push_back({"bound", n, b.witness_n, delta, b.bound, b.witness_n, r.table_digest});
  }
  return out;
}

std::string to_json_line(const ReportRecord& rec) {
  nlohmann::ordered_json j;
  j["type"] = rec.type;
  j["N"] = rec.n_base;
  j["n"] = rec.offset;
  j["delta_eps"] = rec.delta_eps;
  j["bound"] = rec.bound;
  j["witness_n"] = rec.witness_n;
  j["table_digest"] = rec.table_digest;
  return j.dump();
}

ReportRecord parse_json_line(std::string_view line) {
  try {
    const auto j = nlohmann::json::parse(line);
    return {j.at("type").get<std::string>(), j.at("N").get<int>(),      j.at("n").get<int>(),
            j.at("delta_eps").get<double>(), j.at("bound").get<double>(), j.at("witness_n").get<int>(),
            j.at("table_digest").get<std::string>()};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad report record: ") + e.what());
  }
}

}  // namespace gsaudit
