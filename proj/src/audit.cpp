#include "gsaudit/audit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "gsaudit/errors.hpp"
#include "gsaudit/rng.hpp"
#include "gsaudit/table_io.hpp"

namespace gsaudit {

double pair_specific(int n, double energy) {
  if (n < 2) throw ValidationError("pair-specific energy needs N >= 2, got " + std::to_string(n));
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1);
  return energy / pairs;
}

double violation_threshold(double eps_n, double tolerance) {
  return -tolerance * std::max(1.0, std::abs(eps_n));
}

std::string table_digest(const EnergyTable& t) {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(fnv1a64(write_table(t))));
  return hex;
}

std::optional<ImprovedBound> improved_upper_bound(const EnergyTable& t, int n) {
  const double own = t.energy(n);
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1);
  std::optional<ImprovedBound> best;
  for (auto it = t.rows().upper_bound(n); it != t.rows().end(); ++it) {
    const double candidate = pairs * pair_specific(it->first, it->second.energy);
    if (!best || candidate < best->bound) best = ImprovedBound{candidate, it->first - n};
  }
  if (best && best->bound < own) return best;
  return std::nullopt;
}

AuditReport monotonicity_audit(const EnergyTable& t, double tolerance) {
  if (t.empty()) throw ValidationError("cannot audit an empty table");
  if (!(tolerance >= 0.0)) throw ValidationError("audit tolerance must be >= 0");

  // Flatten once; row order is ascending N because the table is a std::map.
  std::vector<int> ns;
  std::vector<double> eps;
  ns.reserve(t.size());
  eps.reserve(t.size());
  for (const auto& [n, entry] : t.rows()) {
    ns.push_back(n);
    eps.push_back(pair_specific(n, entry.energy));
  }

  const std::size_t m = ns.size();
  std::vector<std::vector<Violation>> per_row(m);

#pragma omp parallel for schedule(dynamic, 8) if (m > 512)
  for (std::size_t a = 0; a < m; ++a) {
    const double threshold = violation_threshold(eps[a], tolerance);
    for (std::size_t b = a + 1; b < m; ++b) {
      const double delta = eps[b] - eps[a];
      if (delta < threshold) per_row[a].push_back({ns[a], ns[b] - ns[a], delta});
    }
  }

  AuditReport report;
  report.tolerance = tolerance;
  report.table_digest = table_digest(t);
  for (std::size_t a = 0; a < m; ++a) {
    if (per_row[a].empty()) continue;
    report.violations.insert(report.violations.end(), per_row[a].begin(), per_row[a].end());
    if (auto bound = improved_upper_bound(t, ns[a])) report.improved_bounds.emplace(ns[a], *bound);
  }
  return report;
}

Prop1Report brute_force_prop1_check(const DomainSpec& d, const PotentialSpec& p, int n_max,
                                    const OptimizerSettings& budget, double slack) {
  if (n_max < 2 || n_max > 8) {
    throw ValidationError("brute-force check supports 2 <= N_max <= 8, got " + std::to_string(n_max));
  }
  if (budget.restarts < 100 * n_max) {
    throw ValidationError("brute-force check needs restarts >= 100 * N_max = " +
                          std::to_string(100 * n_max));
  }

  Prop1Report report;
  for (int n = 2; n <= n_max; ++n) {
    const RunResult best = multistart(d, p, static_cast<std::size_t>(n), budget);
    report.rows.push_back({n, best.energy, pair_specific(n, best.energy)});
  }
  for (std::size_t k = 0; k + 1 < report.rows.size(); ++k) {
    const Prop1Row& lo = report.rows[k];
    const Prop1Row& hi = report.rows[k + 1];
    if (!(hi.pair_specific > lo.pair_specific)) report.eps_increasing = false;

    Prop1Step step;
    step.n = lo.n;
    step.lhs = hi.energy;
    step.rhs = static_cast<double>(lo.n + 1) / static_cast<double>(lo.n - 1) * lo.energy;
    step.holds = step.lhs >= step.rhs - slack * std::max(std::abs(step.lhs), std::abs(step.rhs));
    if (!step.holds) report.chain_holds = false;
    report.steps.push_back(step);
  }
  return report;
}

}  // namespace gsaudit
