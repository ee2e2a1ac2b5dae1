#include "gsaudit/optimizer.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "gsaudit/errors.hpp"
#include "gsaudit/kernels.hpp"
#include "gsaudit/rng.hpp"

namespace gsaudit {

namespace {

constexpr int kMaxHalvings = 64;
constexpr double kStepGrowth = 1.2;
constexpr double kTieTolerance = 1e-14;

struct Evaluator {
  const DomainSpec& domain;
  const PotentialSpec& potential;
  std::vector<Vec3> ambient;

  double energy(const std::vector<Point>& pts) {
    ambient.resize(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) ambient[i] = embed(pts[i], domain);
    return kernels::parallel::energy(ambient, potential);
  }

  // Tangent gradient at the points last passed to energy().
  double gradient(const std::vector<Point>& pts, std::vector<Vec3>& g) {
    g.resize(pts.size());
    if (!kernels::parallel::gradient(ambient, potential, g)) {
      throw GradientUndefinedError("gradient undefined: configuration has coincident points");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      g[i] = tangent_project(pts[i], g[i], domain);
      worst = std::max(worst, norm(g[i]));
    }
    return worst;
  }
};

}  // namespace

int OptimizerSettings::resolved_max_iterations(std::size_t n) const {
  return max_iterations ? *max_iterations : static_cast<int>(50 * n);
}

double OptimizerSettings::resolved_initial_step(std::size_t n) const {
  return initial_step ? *initial_step : 0.1 / static_cast<double>(n);
}

void OptimizerSettings::validate() const {
  if (restarts < 1) throw ValidationError("restarts must be >= 1");
  if (!(gradient_tolerance > 0.0)) throw ValidationError("gradient tolerance must be > 0");
  if (max_iterations && *max_iterations < 0) throw ValidationError("max iterations must be >= 0");
  if (initial_step && !(*initial_step > 0.0)) throw ValidationError("initial step must be > 0");
}

std::string OptimizerSettings::digest() const {
  std::ostringstream s;
  s.precision(17);
  s << restarts << '|' << (max_iterations ? std::to_string(*max_iterations) : "auto") << '|'
    << gradient_tolerance << '|';
  if (initial_step) s << *initial_step;
  else s << "auto";
  s << '|' << seed;
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64(s.str())));
  return hex;
}

RunResult local_minimize(Configuration start, const PotentialSpec& p, const OptimizerSettings& s) {
  s.validate();
  const DomainSpec domain = start.domain;
  validate_combination(domain, p);
  const std::size_t n = start.size();
  if (n < 2) throw ValidationError("local_minimize needs N >= 2");
  for (const auto& pt : start.points) {
    if (!is_valid(pt, domain)) throw ValidationError("start point violates the domain invariants");
  }

  Evaluator eval{domain, p, {}};
  RunResult out;
  std::vector<Point> pts = std::move(start.points);
  double energy = eval.energy(pts);
  if (!std::isfinite(energy) || min_pair_distance(eval.ambient) == 0.0) {
    throw ValidationError("start configuration has coincident points");
  }
  std::vector<Vec3> grad;
  double gnorm = eval.gradient(pts, grad);
  out.accepted_energies.push_back(energy);

  const int max_iter = s.resolved_max_iterations(n);
  const double max_step = max_retraction_step(domain);
  double step = s.resolved_initial_step(n);
  std::vector<Point> trial(n);

  int iter = 0;
  while (iter < max_iter && !(gnorm < s.gradient_tolerance)) {
    bool accepted = false;
    for (int h = 0; h < kMaxHalvings; ++h, step *= 0.5) {
      if (!(step * gnorm < max_step)) continue;
      for (std::size_t i = 0; i < n; ++i) trial[i] = retract(pts[i], -step * grad[i], domain);
      const double e = eval.energy(trial);
      if (e < energy) {
        energy = e;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
    pts.swap(trial);
    gnorm = eval.gradient(pts, grad);  // eval.ambient holds the accepted points
    out.accepted_energies.push_back(energy);
    step *= kStepGrowth;
    ++iter;
  }

  out.configuration = Configuration{domain, std::move(pts)};
  out.energy = energy;
  out.gradient_norm = gnorm;
  out.converged = gnorm < s.gradient_tolerance;
  out.iterations = iter;
  return out;
}

RunResult multistart(const DomainSpec& d, const PotentialSpec& p, std::size_t n,
                     const OptimizerSettings& s) {
  s.validate();
  validate_for_minimization(d, p);
  if (n < 2) throw ValidationError("multistart needs N >= 2");

  const int restarts = s.restarts;
  std::vector<RunResult> runs(static_cast<std::size_t>(restarts));
  std::vector<std::string> failures(static_cast<std::size_t>(restarts));

#pragma omp parallel for schedule(dynamic, 1)
  for (int r = 0; r < restarts; ++r) {
    try {
      auto start = random_configuration(d, n, derive_seed(s.seed, static_cast<std::uint64_t>(r)));
      runs[r] = local_minimize(std::move(start), p, s);
      runs[r].restart_index = r;
    } catch (const std::exception& e) {
      failures[r] = e.what();
    }
  }

  int best = -1;
  for (int r = 0; r < restarts; ++r) {
    if (!failures[r].empty()) continue;
    if (best < 0 || runs[r].energy < runs[best].energy - kTieTolerance) best = r;
  }
  if (best < 0) throw ValidationError("every restart failed: " + failures.front());
  return std::move(runs[best]);
}

EnergyTable build_table(const DomainSpec& d, const PotentialSpec& p, const std::vector<int>& ns,
                        const OptimizerSettings& s) {
  for (int n : ns) {
    if (n < 2) throw ValidationError("build_table needs every N >= 2, got " + std::to_string(n));
  }
  const std::string digest = s.digest();
  TableMetadata meta;
  meta.domain = d;
  meta.potential = p;
  meta.source = "gsaudit multistart settings=" + digest;
  EnergyTable table(std::move(meta));
  for (int n : ns) {
    const RunResult best = multistart(d, p, static_cast<std::size_t>(n), s);
    table.insert(n, best.energy,
                 "restart=" + std::to_string(best.restart_index) + " settings=" + digest);
  }
  return table;
}

}  // namespace gsaudit
