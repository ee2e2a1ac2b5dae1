#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsaudit/energy_table.hpp"
#include "gsaudit/optimizer.hpp"

namespace gsaudit {

/// E / (N (N - 1)). Throws ValidationError for N < 2.
double pair_specific(int n, double energy);

/// A certified non-minimal table entry: eps(N + n) < eps(N), hence E^x(N) > E_g(N).
struct Violation {
  int n_base = 0;     // N
  int offset = 0;     // n >= 1
  double delta_eps = 0.0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ImprovedBound {
  double bound = 0.0;
  int witness_n = 0;

  friend bool operator==(const ImprovedBound&, const ImprovedBound&) = default;
};

/// Default relative tolerance: a drop counts as a violation when it exceeds
/// tau * max(1, |eps(N)|).
inline constexpr double kDefaultAuditTolerance = 1e-9;

struct AuditReport {
  std::vector<Violation> violations;           // sorted by (N, n)
  std::map<int, ImprovedBound> improved_bounds;
  double tolerance = kDefaultAuditTolerance;
  std::string table_digest;

  bool clean() const { return violations.empty(); }
};

/// Threshold below which eps(N + n) - eps(N) is reported for a given eps(N).
double violation_threshold(double eps_n, double tolerance);

/// Every pair of present rows N < M with eps(M) - eps(N) below the threshold,
/// plus the improved bound of every violating N.
AuditReport monotonicity_audit(const EnergyTable& t, double tolerance = kDefaultAuditTolerance);

/// min over present M > N of N (N - 1) eps(M); returned only when strictly
/// below E^x(N). Throws LookupError when N is absent.
std::optional<ImprovedBound> improved_upper_bound(const EnergyTable& t, int n);

/// Content digest of the table rows and metadata (16 hex digits).
std::string table_digest(const EnergyTable& t);

struct Prop1Row {
  int n = 0;
  double energy = 0.0;       // multistart estimate of E_g(N)
  double pair_specific = 0.0;
};

struct Prop1Step {
  int n = 0;                 // compares N and N + 1
  double lhs = 0.0;          // E(N + 1)
  double rhs = 0.0;          // (N + 1) / (N - 1) E(N)
  bool holds = false;
};

struct Prop1Report {
  std::vector<Prop1Row> rows;
  std::vector<Prop1Step> steps;
  bool eps_increasing = true;   // strictly
  bool chain_holds = true;      // every step within slack
};

/// Estimates E_g(N) for N = 2..n_max by heavy multistart and checks both
/// strict growth of eps and E(N + 1) >= (N + 1) / (N - 1) E(N) with relative
/// slack. Requires 2 <= n_max <= 8 and restarts >= 100 n_max.
Prop1Report brute_force_prop1_check(const DomainSpec& d, const PotentialSpec& p, int n_max,
                                    const OptimizerSettings& budget, double slack = 1e-7);

}  // namespace gsaudit
