#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gsaudit/energy_table.hpp"

namespace gsaudit {

enum class ModelFamily { LogSphere, ThomsonSphere };

/// Large-N expansions of E_g(N) on the unit sphere.
///   LogSphere:     a N^2 + b N ln N [+ c N] [+ d ln N]
///   ThomsonSphere: a N^2 + b N^(3/2) + c N + d N^(1/2) + e
/// Unset optional terms are dropped; a and b are required.
struct AsymptoticModel {
  ModelFamily family = ModelFamily::LogSphere;
  std::optional<double> a, b, c, d, e;

  /// a = ln(e/4)/4, b = -1/4.
  static AsymptoticModel log_sphere(std::optional<double> c = {}, std::optional<double> d = {});
  /// a = 1/2, b from compute_b_coefficient, c = e = 0.
  static AsymptoticModel thomson_sphere(double d = 0.0, double b_tail_tolerance = 1e-8);
};

struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;  // bound on |value - exact| from the truncated tail
  std::size_t terms = 0;
};

/// Order of the alternating-series acceleration used for eta(s).
inline constexpr int kEtaAccelerationOrder = 40;

/// Dirichlet eta(s) = sum_{k>=0} (-1)^k (k+1)^-s, accelerated with the
/// Cohen-Rodriguez Villegas-Zagier weights of the given order.
double dirichlet_eta(double s, int order = kEtaAccelerationOrder);

/// zeta(s) = eta(s) / (1 - 2^(1-s)), for 0 < s, s != 1.
double zeta_via_eta(double s, int order = kEtaAccelerationOrder);

/// sum_{k>=0} (1/sqrt(3k+1) - 1/sqrt(3k+2)), truncated where the
/// integral-comparison tail bound, scaled by `scale`, falls below the tolerance.
SeriesValue mod3_character_sum(double tail_tolerance, double scale = 1.0);

/// b = 3 (sqrt(3)/(8 pi))^(1/2) zeta(1/2) * mod3_character_sum.
/// tail_tolerance must lie in (0, 1e-3].
SeriesValue compute_b_coefficient(double tail_tolerance);

double model_energy(const AsymptoticModel& m, int n);
double pair_specific_model(const AsymptoticModel& m, int n);

struct Residual {
  int n = 0;
  double value = 0.0;  // eps^x(N) - model
};

/// Throws ModelError unless the table metadata describes the model's family.
void check_compatible(const TableMetadata& meta, ModelFamily family);

/// Per-row eps^x(N) - pair_specific_model(N), ascending in N.
std::vector<Residual> residuals(const EnergyTable& t, const AsymptoticModel& m);

}  // namespace gsaudit
