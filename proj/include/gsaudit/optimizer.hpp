#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsaudit/energy_table.hpp"
#include "gsaudit/geometry.hpp"
#include "gsaudit/potentials.hpp"

namespace gsaudit {

struct OptimizerSettings {
  int restarts = 50;
  std::optional<int> max_iterations;    // 50 N when unset
  double gradient_tolerance = 1e-10;    // on the largest per-point tangent gradient norm
  std::optional<double> initial_step;   // 0.1 / N when unset
  std::uint64_t seed = 0;

  int resolved_max_iterations(std::size_t n) const;
  double resolved_initial_step(std::size_t n) const;
  void validate() const;
  /// Short hex digest of every field, used to label generated tables.
  std::string digest() const;
};

struct RunResult {
  Configuration configuration;
  double energy = 0.0;
  double gradient_norm = 0.0;
  bool converged = false;
  int restart_index = 0;
  int iterations = 0;
  std::vector<double> accepted_energies;  // starting energy first
};

/// Projected-gradient descent with a halving/growing step and retraction
/// after every step. Stops on the gradient tolerance, the iteration cap, or
/// when no halving of the step decreases the energy any more (the energy
/// has reached floating-point resolution).
RunResult local_minimize(Configuration start, const PotentialSpec& p, const OptimizerSettings& s);

/// Best of `s.restarts` local minimizations from random starts. Restart r is
/// seeded with derive_seed(s.seed, r); ties within 1e-14 go to the lowest r.
RunResult multistart(const DomainSpec& d, const PotentialSpec& p, std::size_t n,
                     const OptimizerSettings& s);

/// One multistart result per N.
EnergyTable build_table(const DomainSpec& d, const PotentialSpec& p, const std::vector<int>& ns,
                        const OptimizerSettings& s);

}  // namespace gsaudit
