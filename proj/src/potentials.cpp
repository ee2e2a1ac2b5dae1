#include "gsaudit/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gsaudit/errors.hpp"
#include "gsaudit/kernels.hpp"
#include "gsaudit/pair_law.hpp"

namespace gsaudit {

PotentialSpec PotentialSpec::riesz(double s) {
  if (!(s < 2.0) || !std::isfinite(s)) {
    throw ValidationError("Riesz exponent must be a finite s < 2");
  }
  if (s == 0.0) {
    throw ValidationError("Riesz exponent s = 0 is the logarithmic kernel; use log");
  }
  return {PotentialKind::Riesz, s, 0};
}

PotentialSpec PotentialSpec::coulomb_dim(int d) {
  if (d < 3) throw ValidationError("Coulomb dimension must be >= 3 (D = 2 is the log kernel)");
  return {PotentialKind::CoulombDim, 2.0 - d, d};
}

bool PotentialSpec::repulsive_at_contact() const {
  switch (kind) {
    case PotentialKind::LogCoulomb:
    case PotentialKind::CoulombDim:
    case PotentialKind::LennardJones:
      return true;
    case PotentialKind::Riesz:
      return s < 0.0;
  }
  return true;
}

std::string to_string(const PotentialSpec& p) {
  std::ostringstream out;
  out.precision(15);
  switch (p.kind) {
    case PotentialKind::LogCoulomb:
      out << "log";
      break;
    case PotentialKind::Riesz:
      out << "riesz:" << p.s;
      break;
    case PotentialKind::CoulombDim:
      out << "coulomb:" << p.dim;
      break;
    case PotentialKind::LennardJones:
      out << "lj";
      break;
  }
  return out.str();
}

void validate_combination(const DomainSpec& d, const PotentialSpec& p) {
  if (p.kind == PotentialKind::LennardJones && d.compact()) {
    throw ValidationError("Lennard-Jones is only supported on free3, not on " + to_string(d));
  }
}

void validate_for_minimization(const DomainSpec& d, const PotentialSpec& p) {
  validate_combination(d, p);
  if (d.kind == DomainKind::Free3 && p.kind != PotentialKind::LennardJones) {
    throw ValidationError("on free3 only lj has bounded minimizers; " + to_string(p) +
                          " needs a compact domain");
  }
}

double pair_energy(const PotentialSpec& p, double r) {
  if (r < 0.0 || std::isnan(r)) throw ValidationError("pair distance must be >= 0");
  return laws::visit(p, [r](auto law) { return law.value(r); });
}

double pair_slope(const PotentialSpec& p, double r) {
  if (!(r > 0.0)) throw ValidationError("pair slope needs r > 0");
  return laws::visit(p, [r](auto law) { return law.slope(r); });
}

double total_energy(const Configuration& c, const PotentialSpec& p) {
  if (c.size() < 2) throw ValidationError("total energy needs N >= 2");
  validate_combination(c.domain, p);
  const auto x = embed_all(c);
  return kernels::parallel::energy(x, p);
}

std::vector<Vec3> energy_gradient(const Configuration& c, const PotentialSpec& p) {
  validate_combination(c.domain, p);
  const auto x = embed_all(c);
  std::vector<Vec3> g(x.size());
  if (!kernels::parallel::gradient(x, p, g)) {
    throw GradientUndefinedError("gradient undefined: configuration has coincident points");
  }
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = tangent_project(c.points[i], g[i], c.domain);
  return g;
}

double max_norm(const std::vector<Vec3>& g) {
  double m = 0.0;
  for (const auto& v : g) m = std::max(m, norm(v));
  return m;
}

}  // namespace gsaudit
