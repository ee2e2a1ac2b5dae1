#pragma once

// Concrete pair laws used by the energy/gradient kernels. Each law exposes
// value(r) and slope(r) so the inner loops are specialised per kernel.

#include <cmath>
#include <limits>
#include <utility>

#include "gsaudit/potentials.hpp"

namespace gsaudit::laws {

struct Log {
  double value(double r) const {
    return r > 0.0 ? -std::log(r) : std::numeric_limits<double>::infinity();
  }
  double slope(double r) const { return -1.0 / r; }
};

// Riesz s = -1, the three-dimensional Coulomb kernel.
struct InverseDistance {
  double value(double r) const {
    return r > 0.0 ? 1.0 / r : std::numeric_limits<double>::infinity();
  }
  double slope(double r) const { return -1.0 / (r * r); }
};

// -sign(s) r^s for general s < 2.
struct Power {
  double s;
  double value(double r) const {
    if (r > 0.0) return s > 0.0 ? -std::pow(r, s) : std::pow(r, s);
    return s > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  double slope(double r) const {
    return s > 0.0 ? -s * std::pow(r, s - 1.0) : s * std::pow(r, s - 1.0);
  }
};

struct LennardJones {
  double value(double r) const {
    if (!(r > 0.0)) return std::numeric_limits<double>::infinity();
    const double inv2 = 1.0 / (r * r);
    const double inv6 = inv2 * inv2 * inv2;
    return inv6 * inv6 - inv6;
  }
  double slope(double r) const {
    const double inv = 1.0 / r;
    const double inv2 = inv * inv;
    const double inv6 = inv2 * inv2 * inv2;
    return (-12.0 * inv6 * inv6 + 6.0 * inv6) * inv;
  }
};

/// Calls f with the concrete law for p. CoulombDim and Riesz with the same
/// exponent resolve to the same law, so both spellings give identical bits.
template <typename F>
decltype(auto) visit(const PotentialSpec& p, F&& f) {
  switch (p.kind) {
    case PotentialKind::LogCoulomb:
      return std::forward<F>(f)(Log{});
    case PotentialKind::LennardJones:
      return std::forward<F>(f)(LennardJones{});
    case PotentialKind::Riesz:
    case PotentialKind::CoulombDim:
      break;
  }
  if (p.s == -1.0) return std::forward<F>(f)(InverseDistance{});
  return std::forward<F>(f)(Power{p.s});
}

}  // namespace gsaudit::laws
