#include "gsaudit/commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>

#include "CLI11.hpp"
#include "gsaudit/asymptotics.hpp"
#include "gsaudit/audit.hpp"
#include "gsaudit/errors.hpp"
#include "gsaudit/optimizer.hpp"
#include "gsaudit/table_io.hpp"

namespace gsaudit {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

void print_warnings(const EnergyTable& t, std::ostream& err) {
  for (const auto& w : t.warnings()) err << "warning: " << w << '\n';
}

struct AuditFlags {
  std::string input;
  double tolerance = kDefaultAuditTolerance;
  std::string format = "text";
};

int audit_command(const AuditFlags& f, std::ostream& out, std::ostream& err) {
  const EnergyTable table = parse_table(f.input);
  print_warnings(table, err);
  const AuditReport report = monotonicity_audit(table, f.tolerance);
  const auto records = report_records(table, report);

  if (f.format == "records") {
    for (const auto& rec : records) out << to_json_line(rec) << '\n';
  } else {
    for (const auto& rec : records) {
      if (rec.type != "violation") continue;
      out << "N=" << rec.n_base << " fails n=" << rec.offset << ": Δε=" << fmt("%.10g", rec.delta_eps)
          << "; improved bound " << fmt("%.10g", rec.bound) << '\n';
    }
    for (const auto& [n, b] : report.improved_bounds) {
      out << "N=" << n << " best bound " << fmt("%.10g", b.bound) << " (witness n=" << b.witness_n
          << ", listed " << fmt("%.10g", table.energy(n)) << ")\n";
    }
    out << report.violations.size() << " violation(s) among " << table.size() << " rows; table "
        << report.table_digest << '\n';
  }
  return report.clean() ? kExitClean : kExitViolations;
}

struct BoundFlags {
  std::string input;
  int n = 0;
};

int bound_command(const BoundFlags& f, std::ostream& out, std::ostream& err) {
  const EnergyTable table = parse_table(f.input);
  print_warnings(table, err);
  const auto bound = improved_upper_bound(table, f.n);
  if (!bound) {
    out << "N=" << f.n << " no improvement over listed " << fmt("%.10g", table.energy(f.n)) << '\n';
    return kExitClean;
  }
  out << "N=" << f.n << " bound " << fmt("%.10g", bound->bound) << " (witness n=" << bound->witness_n
      << ", listed " << fmt("%.10g", table.energy(f.n)) << ")\n";
  return kExitViolations;
}

struct OptimizeFlags {
  std::string domain = "sphere";
  std::string potential;
  std::string n_list;
  OptimizerSettings settings;
  std::optional<int> max_iterations;
  std::optional<double> initial_step;
  std::string out_path;
};

int optimize_command(OptimizeFlags f, std::ostream& out, std::ostream& err) {
  const DomainSpec d = parse_domain(f.domain);
  const PotentialSpec p = parse_potential(f.potential);
  validate_for_minimization(d, p);
  const std::vector<int> ns = parse_n_list(f.n_list);
  f.settings.max_iterations = f.max_iterations;
  f.settings.initial_step = f.initial_step;
  const EnergyTable table = build_table(d, p, ns, f.settings);
  write_table_file(table, f.out_path);
  err << "wrote " << table.size() << " rows to " << f.out_path << '\n';
  (void)out;
  return kExitClean;
}

struct AsymptoteFlags {
  std::string model;
  std::string input;
  std::string prefix;
  std::string n_list;
  std::optional<double> c, d, e;
};

int asymptote_command(const AsymptoteFlags& f, std::ostream& out, std::ostream& err) {
  AsymptoticModel model;
  if (f.model == "log-sphere") {
    model = AsymptoticModel::log_sphere(f.c, f.d);
  } else if (f.model == "thomson-sphere") {
    model = AsymptoticModel::thomson_sphere(f.d.value_or(0.0));
    if (f.c) model.c = f.c;
    if (f.e) model.e = f.e;
  } else {
    throw ValidationError("unknown model '" + f.model + "'; valid values: log-sphere, thomson-sphere");
  }

  EnergyTable table;
  if (!f.input.empty()) {
    table = parse_table(f.input, ParseOptions{.allow_empty = true});
    print_warnings(table, err);
    check_compatible(table.metadata(), model.family);
  }

  std::set<int> model_ns;
  for (const auto& [n, entry] : table.rows()) model_ns.insert(n);
  if (!f.n_list.empty()) {
    for (int n : parse_n_list(f.n_list)) {
      if (n < 2) throw ValidationError("model N must be >= 2");
      model_ns.insert(n);
    }
  }

  const std::string data_path = f.prefix + "-data.dat";
  const std::string model_path = f.prefix + "-model.dat";
  std::ofstream data(data_path, std::ios::binary | std::ios::trunc);
  std::ofstream curve(model_path, std::ios::binary | std::ios::trunc);
  if (!data || !curve) throw ParseError("cannot write " + f.prefix + "-*.dat");

  char buf[96];
  for (const auto& [n, entry] : table.rows()) {
    std::snprintf(buf, sizeof buf, "%d\t%.17g\n", n, pair_specific(n, entry.energy));
    data << buf;
  }
  for (int n : model_ns) {
    std::snprintf(buf, sizeof buf, "%d\t%.17g\n", n, pair_specific_model(model, n));
    curve << buf;
  }
  out << "wrote " << data_path << " (" << table.size() << " rows) and " << model_path << " ("
      << model_ns.size() << " rows)\n";
  return kExitClean;
}

struct Prop1Flags {
  std::string domain = "sphere";
  std::string potential;
  int n_max = 0;
  std::optional<int> restarts;
  std::uint64_t seed = 0;
};

int prop1_command(const Prop1Flags& f, std::ostream& out, std::ostream&) {
  const DomainSpec d = parse_domain(f.domain);
  const PotentialSpec p = parse_potential(f.potential);
  OptimizerSettings budget;
  budget.restarts = f.restarts.value_or(100 * std::max(f.n_max, 2));
  budget.seed = f.seed;
  const Prop1Report report = brute_force_prop1_check(d, p, f.n_max, budget);

  for (const auto& row : report.rows) {
    out << "N=" << row.n << "\tE=" << fmt("%.12g", row.energy) << "\teps=" << fmt("%.8g", row.pair_specific)
        << '\n';
  }
  for (const auto& step : report.steps) {
    out << "E(" << step.n + 1 << ")=" << fmt("%.12g", step.lhs) << (step.holds ? " >= " : " < ") << "("
        << step.n + 1 << "/" << step.n - 1 << ")E(" << step.n << ")=" << fmt("%.12g", step.rhs) << '\n';
  }
  out << "eps increasing: " << (report.eps_increasing ? "yes" : "NO") << '\n';
  out << "per-step inequality: " << (report.chain_holds ? "holds" : "FAILS") << '\n';
  return report.eps_increasing && report.chain_holds ? kExitClean : kExitViolations;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ground-state energy table auditing and candidate generation", "gsaudit"};
  app.require_subcommand(1);

  AuditFlags audit;
  auto* audit_cmd = app.add_subcommand("audit", "Check a table for pair-specific monotonicity violations");
  audit_cmd->add_option("--input", audit.input, "Table file")->required();
  audit_cmd->add_option("--tolerance", audit.tolerance, "Relative tolerance tau (default 1e-9)")
      ->check(CLI::NonNegativeNumber);
  audit_cmd->add_option("--format", audit.format, "text or records")->check(CLI::IsMember({"text", "records"}));

  BoundFlags bound;
  auto* bound_cmd = app.add_subcommand("bound", "Improved upper bound for one N");
  bound_cmd->add_option("--input", bound.input, "Table file")->required();
  bound_cmd->add_option("--n", bound.n, "Row N")->required();

  OptimizeFlags opt;
  auto* opt_cmd = app.add_subcommand("optimize", "Build a table of multistart minimum energies");
  opt_cmd->add_option("--domain", opt.domain, "sphere | torus:<ratio> | free3");
  opt_cmd->add_option("--potential", opt.potential, "log | riesz:<s> | coulomb:<D> | lj")->required();
  opt_cmd->add_option("--n", opt.n_list, "N list or range, e.g. 2-6,12")->required();
  opt_cmd->add_option("--restarts", opt.settings.restarts, "Random restarts per N");
  opt_cmd->add_option("--seed", opt.settings.seed, "Base seed");
  opt_cmd->add_option("--max-iterations", opt.max_iterations, "Default 50 N");
  opt_cmd->add_option("--gradient-tolerance", opt.settings.gradient_tolerance, "Default 1e-10");
  opt_cmd->add_option("--initial-step", opt.initial_step, "Default 0.1 / N");
  opt_cmd->add_option("--out", opt.out_path, "Output table file")->required();

  AsymptoteFlags asym;
  auto* asym_cmd = app.add_subcommand("asymptote", "Emit plot data for a table and an asymptotic model");
  asym_cmd->add_option("--model", asym.model, "log-sphere | thomson-sphere")->required();
  asym_cmd->add_option("--input", asym.input, "Table file (optional)");
  asym_cmd->add_option("--out", asym.prefix, "Output prefix")->required();
  asym_cmd->add_option("--n", asym.n_list, "Extra N values for the model curve");
  asym_cmd->add_option("--c", asym.c, "Coefficient c");
  asym_cmd->add_option("--d", asym.d, "Coefficient d");
  asym_cmd->add_option("--e", asym.e, "Coefficient e (thomson-sphere)");

  Prop1Flags prop1;
  auto* prop1_cmd = app.add_subcommand("prop1-check", "Brute-force check of pair-specific monotonicity for small N");
  prop1_cmd->add_option("--domain", prop1.domain, "sphere | torus:<ratio> | free3");
  prop1_cmd->add_option("--potential", prop1.potential, "log | riesz:<s> | coulomb:<D> | lj")->required();
  prop1_cmd->add_option("--n-max", prop1.n_max, "Largest N, at most 8")->required();
  prop1_cmd->add_option("--restarts", prop1.restarts, "Default 100 * n-max");
  prop1_cmd->add_option("--seed", prop1.seed, "Base seed");

  std::vector<std::string> argv_store{"gsaudit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitClean : kExitInputError;
  }

  try {
    if (*audit_cmd) return audit_command(audit, out, err);
    if (*bound_cmd) return bound_command(bound, out, err);
    if (*opt_cmd) return optimize_command(opt, out, err);
    if (*asym_cmd) return asymptote_command(asym, out, err);
    if (*prop1_cmd) return prop1_command(prop1, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace gsaudit
