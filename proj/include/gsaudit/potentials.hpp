#pragma once

#include <string>
#include <vector>

#include "gsaudit/geometry.hpp"
#include "gsaudit/vec3.hpp"

namespace gsaudit {

enum class PotentialKind { LogCoulomb, Riesz, CoulombDim, LennardJones };

/// Pair interaction as a function of chordal distance r.
///   LogCoulomb     -ln r
///   Riesz(s)       -sign(s) r^s, s < 2, s != 0
///   CoulombDim(D)  r^(2-D), D >= 3; the same function as Riesz(2 - D)
///   LennardJones   r^-12 - r^-6, Free3 only
struct PotentialSpec {
  PotentialKind kind = PotentialKind::LogCoulomb;
  double s = 0.0;  // Riesz exponent; for CoulombDim holds 2 - D
  int dim = 0;     // CoulombDim only

  static PotentialSpec log_coulomb() { return {PotentialKind::LogCoulomb, 0.0, 0}; }
  static PotentialSpec riesz(double s);
  static PotentialSpec coulomb_dim(int d);
  static PotentialSpec lennard_jones() { return {PotentialKind::LennardJones, 0.0, 0}; }

  /// True when the kernel diverges to +inf as r -> 0.
  bool repulsive_at_contact() const;

  friend bool operator==(const PotentialSpec&, const PotentialSpec&) = default;
};

std::string to_string(const PotentialSpec& p);

/// Rejects combinations outside the supported setting (Lennard-Jones on a
/// compact surface).
void validate_combination(const DomainSpec& d, const PotentialSpec& p);

/// Stricter check for minimization: Free3 additionally requires
/// Lennard-Jones, the only kernel here with bounded clusters as minimizers.
void validate_for_minimization(const DomainSpec& d, const PotentialSpec& p);

/// U(r). r = 0 gives +inf for kernels repulsive at contact and 0 for Riesz 0 < s < 2.
double pair_energy(const PotentialSpec& p, double r);

/// dU/dr for r > 0.
double pair_slope(const PotentialSpec& p, double r);

/// Sum of U over unordered pairs of chordal distances. May be +inf.
double total_energy(const Configuration& c, const PotentialSpec& p);

/// Tangent gradient of total_energy at every point, in ambient coordinates.
/// Throws GradientUndefinedError if two points coincide.
std::vector<Vec3> energy_gradient(const Configuration& c, const PotentialSpec& p);

/// Largest per-point norm of a gradient list.
double max_norm(const std::vector<Vec3>& g);

}  // namespace gsaudit
