#include "gsaudit/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "gsaudit/audit.hpp"
#include "gsaudit/errors.hpp"
#include "gsaudit/summation.hpp"

namespace gsaudit {

namespace {

double character_term(double k) { return 1.0 / std::sqrt(3.0 * k + 1.0) - 1.0 / std::sqrt(3.0 * k + 2.0); }

// Integral of the term from K to infinity, in a cancellation-free form.
double character_tail_integral(double k) {
  return (2.0 / 3.0) / (std::sqrt(3.0 * k + 2.0) + std::sqrt(3.0 * k + 1.0));
}

double b_prefactor() { return 3.0 * std::sqrt(std::numbers::sqrt3 / (8.0 * std::numbers::pi)); }

}  // namespace

AsymptoticModel AsymptoticModel::log_sphere(std::optional<double> c, std::optional<double> d) {
  AsymptoticModel m;
  m.family = ModelFamily::LogSphere;
  m.a = 0.25 * (1.0 - std::log(4.0));
  m.b = -0.25;
  m.c = c;
  m.d = d;
  return m;
}

AsymptoticModel AsymptoticModel::thomson_sphere(double d, double b_tail_tolerance) {
  AsymptoticModel m;
  m.family = ModelFamily::ThomsonSphere;
  m.a = 0.5;
  m.b = compute_b_coefficient(b_tail_tolerance).value;
  m.c = 0.0;
  m.d = d;
  m.e = 0.0;
  return m;
}

double dirichlet_eta(double s, int order) {
  if (order < 1) throw ValidationError("eta acceleration order must be >= 1");
  const double n = order;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  double sum = 0.0;
  for (int k = 0; k < order; ++k) {
    c = b - c;
    sum += c * std::pow(k + 1.0, -s);
    b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
  }
  return sum / d;
}

double zeta_via_eta(double s, int order) {
  if (!(s > 0.0) || s == 1.0) throw ValidationError("zeta_via_eta needs s > 0, s != 1");
  return dirichlet_eta(s, order) / (1.0 - std::pow(2.0, 1.0 - s));
}

SeriesValue mod3_character_sum(double tail_tolerance, double scale) {
  // Terms decrease, so sum_{k>=K} lies in [I(K), I(K) + g(K)] with I the tail
  // integral. Estimate I(K) + g(K)/2 leaves an error of at most g(K)/2.
  CompensatedSum head;
  std::size_t k = 0;
  while (std::abs(scale) * 0.5 * character_term(static_cast<double>(k)) > tail_tolerance) {
    head.add(character_term(static_cast<double>(k)));
    ++k;
  }
  const double kk = static_cast<double>(k);
  const double g = character_term(kk);
  head.add(character_tail_integral(kk));
  head.add(0.5 * g);
  return {head.value(), std::abs(scale) * 0.5 * g, k};
}

SeriesValue compute_b_coefficient(double tail_tolerance) {
  if (!(tail_tolerance > 0.0) || tail_tolerance > 1e-3) {
    throw ValidationError("tail tolerance must lie in (0, 1e-3]");
  }
  const double front = b_prefactor() * zeta_via_eta(0.5);
  const SeriesValue sum = mod3_character_sum(tail_tolerance, front);
  return {front * sum.value, sum.tail_bound, sum.terms};
}

double model_energy(const AsymptoticModel& m, int n) {
  if (n < 2) throw ValidationError("model energy needs N >= 2");
  if (!m.a || !m.b) throw ModelError("asymptotic model needs coefficients a and b");
  const double N = n;
  double e = *m.a * N * N;
  if (m.family == ModelFamily::LogSphere) {
    e += *m.b * N * std::log(N);
    if (m.c) e += *m.c * N;
    if (m.d) e += *m.d * std::log(N);
  } else {
    e += *m.b * N * std::sqrt(N);
    if (m.c) e += *m.c * N;
    if (m.d) e += *m.d * std::sqrt(N);
    if (m.e) e += *m.e;
  }
  return e;
}

double pair_specific_model(const AsymptoticModel& m, int n) { return pair_specific(n, model_energy(m, n)); }

void check_compatible(const TableMetadata& meta, ModelFamily family) {
  const char* name = family == ModelFamily::LogSphere ? "log-sphere" : "thomson-sphere";
  if (!meta.domain || !meta.potential) {
    throw ModelError(std::string("table lacks domain/potential metadata required by the ") + name + " model");
  }
  const bool sphere = meta.domain->kind == DomainKind::Sphere2;
  const PotentialSpec& p = *meta.potential;
  const bool ok = family == ModelFamily::LogSphere
                      ? p.kind == PotentialKind::LogCoulomb
                      : (p.kind == PotentialKind::Riesz || p.kind == PotentialKind::CoulombDim) && p.s == -1.0;
  if (!sphere || !ok) {
    throw ModelError(std::string("the ") + name + " model does not apply to a " + to_string(*meta.domain) +
                     " / " + to_string(p) + " table");
  }
}

std::vector<Residual> residuals(const EnergyTable& t, const AsymptoticModel& m) {
  check_compatible(t.metadata(), m.family);
  std::vector<Residual> out;
  out.reserve(t.size());
  for (const auto& [n, entry] : t.rows()) {
    out.push_back({n, pair_specific(n, entry.energy) - pair_specific_model(m, n)});
  }
  return out;
}

}  // namespace gsaudit
