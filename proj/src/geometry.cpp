#include "gsaudit/geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "gsaudit/errors.hpp"
#include "gsaudit/rng.hpp"

namespace gsaudit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTorusMaxStep = 0.5;

}  // namespace

DomainSpec DomainSpec::torus(double aspect_ratio) {
  if (!(aspect_ratio > 1.0) || !std::isfinite(aspect_ratio)) {
    throw ValidationError("torus aspect ratio must be a finite number > 1, got " +
                          std::to_string(aspect_ratio));
  }
  return {DomainKind::Torus2, aspect_ratio};
}

Point sphere_point(const Vec3& v) {
  const double n = norm(v);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw ValidationError("sphere point needs a finite nonzero direction");
  }
  return {v * (1.0 / n)};
}

Point torus_point(double theta, double phi) { return {{wrap_angle(theta), wrap_angle(phi), 0.0}}; }

Point free_point(const Vec3& v) { return {v}; }

double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

Vec3 embed(const Point& p, const DomainSpec& d) {
  if (d.kind != DomainKind::Torus2) return p.coords;
  const double theta = p.coords.x;
  const double phi = p.coords.y;
  const double ring = d.aspect_ratio + std::cos(theta);
  return {ring * std::cos(phi), ring * std::sin(phi), std::sin(theta)};
}

std::vector<Vec3> embed_all(const Configuration& c) {
  std::vector<Vec3> out;
  out.reserve(c.points.size());
  for (const auto& p : c.points) out.push_back(embed(p, c.domain));
  return out;
}

double chordal_distance(const Point& p, const Point& q, const DomainSpec& d) {
  return norm(embed(p, d) - embed(q, d));
}

Vec3 surface_normal(const Point& p, const DomainSpec& d) {
  switch (d.kind) {
    case DomainKind::Sphere2:
      return p.coords;
    case DomainKind::Torus2: {
      const double theta = p.coords.x;
      const double phi = p.coords.y;
      return {std::cos(theta) * std::cos(phi), std::cos(theta) * std::sin(phi), std::sin(theta)};
    }
    case DomainKind::Free3:
      break;
  }
  throw ValidationError("free 3-space has no surface normal");
}

Vec3 tangent_project(const Point& p, const Vec3& v, const DomainSpec& d) {
  if (d.kind == DomainKind::Free3) return v;
  const Vec3 n = surface_normal(p, d);
  return v - dot(v, n) * n;
}

double max_retraction_step(const DomainSpec& d) {
  return d.kind == DomainKind::Torus2 ? kTorusMaxStep : std::numeric_limits<double>::infinity();
}

Point retract(const Point& p, const Vec3& step, const DomainSpec& d) {
  if (step == Vec3{}) return p;
  switch (d.kind) {
    case DomainKind::Sphere2:
      return {normalized(p.coords + step)};
    case DomainKind::Free3:
      return {p.coords + step};
    case DomainKind::Torus2: {
      const double len = norm(step);
      if (!(len < kTorusMaxStep)) {
        std::ostringstream msg;
        msg << "torus retraction step " << len << " is not below " << kTorusMaxStep;
        throw StepSizeError(msg.str());
      }
      // Nearest torus point: azimuth from the (x, y) shadow, tube angle from
      // the offset to the centre circle.
      const Vec3 y = embed(p, d) + step;
      const double phi = std::atan2(y.y, y.x);
      const double rho = std::hypot(y.x, y.y);
      const double theta = std::atan2(y.z, rho - d.aspect_ratio);
      return torus_point(theta, phi);
    }
  }
  return p;
}

Configuration random_configuration(const DomainSpec& d, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw ValidationError("random_configuration needs N >= 1");
  std::mt19937_64 gen(splitmix64(seed));
  Configuration c{d, {}};
  c.points.reserve(n);

  switch (d.kind) {
    case DomainKind::Sphere2: {
      std::normal_distribution<double> gauss(0.0, 1.0);
      while (c.points.size() < n) {
        const Vec3 v{gauss(gen), gauss(gen), gauss(gen)};
        const double r2 = norm2(v);
        if (r2 < 1e-300) continue;
        c.points.push_back({v * (1.0 / std::sqrt(r2))});
      }
      break;
    }
    case DomainKind::Torus2: {
      // Area element is (R + cos theta) dtheta dphi; accept theta with
      // probability (R + cos theta) / (R + 1).
      std::uniform_real_distribution<double> angle(0.0, kTwoPi);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      const double R = d.aspect_ratio;
      while (c.points.size() < n) {
        const double theta = angle(gen);
        if (unit(gen) * (R + 1.0) > R + std::cos(theta)) continue;
        c.points.push_back(torus_point(theta, angle(gen)));
      }
      break;
    }
    case DomainKind::Free3: {
      const double half = std::cbrt(static_cast<double>(n));
      std::uniform_real_distribution<double> coord(-half, half);
      for (std::size_t i = 0; i < n; ++i) {
        const double x = coord(gen);
        const double y = coord(gen);
        const double z = coord(gen);
        c.points.push_back({{x, y, z}});
      }
      break;
    }
  }
  return c;
}

bool is_valid(const Point& p, const DomainSpec& d) {
  const Vec3& c = p.coords;
  if (!std::isfinite(c.x) || !std::isfinite(c.y) || !std::isfinite(c.z)) return false;
  switch (d.kind) {
    case DomainKind::Sphere2:
      return std::abs(norm(c) - 1.0) <= 1e-12;
    case DomainKind::Torus2:
      return c.x >= 0.0 && c.x < kTwoPi && c.y >= 0.0 && c.y < kTwoPi && c.z == 0.0;
    case DomainKind::Free3:
      return true;
  }
  return false;
}

double min_pair_distance(std::span<const Vec3> x) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      best = std::min(best, norm(x[i] - x[j]));
    }
  }
  return best;
}

std::string to_string(const DomainSpec& d) {
  switch (d.kind) {
    case DomainKind::Sphere2:
      return "sphere";
    case DomainKind::Torus2: {
      std::ostringstream s;
      s.precision(15);
      s << "torus:" << d.aspect_ratio;
      return s.str();
    }
    case DomainKind::Free3:
      return "free3";
  }
  return "?";
}

}  // namespace gsaudit
