#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gsaudit/vec3.hpp"

namespace gsaudit {

enum class DomainKind { Sphere2, Torus2, Free3 };

/// The constraint manifold. For Torus2 the minor radius is fixed to 1 and
/// `aspect_ratio` is the major radius R (> 1, so the embedding does not
/// self-intersect). The aspect ratio is ignored for the other kinds.
struct DomainSpec {
  DomainKind kind = DomainKind::Sphere2;
  double aspect_ratio = 0.0;

  static DomainSpec sphere() { return {DomainKind::Sphere2, 0.0}; }
  static DomainSpec torus(double aspect_ratio);
  static DomainSpec free3() { return {DomainKind::Free3, 0.0}; }

  bool compact() const { return kind != DomainKind::Free3; }

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;
};

/// Intrinsic coordinates of one point.
///   Sphere2: unit 3-vector in `coords`.
///   Torus2:  coords.x = theta (tube angle), coords.y = phi (azimuth), both in [0, 2pi); coords.z = 0.
///   Free3:   position in `coords`.
struct Point {
  Vec3 coords;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Configuration {
  DomainSpec domain;
  std::vector<Point> points;

  std::size_t size() const { return points.size(); }
};

Point sphere_point(const Vec3& v);
Point torus_point(double theta, double phi);
Point free_point(const Vec3& v);

/// Reduce an angle to [0, 2pi).
double wrap_angle(double a);

Vec3 embed(const Point& p, const DomainSpec& d);
std::vector<Vec3> embed_all(const Configuration& c);

double chordal_distance(const Point& p, const Point& q, const DomainSpec& d);

/// Outward unit normal of the embedded surface at p. Undefined for Free3.
Vec3 surface_normal(const Point& p, const DomainSpec& d);

Vec3 tangent_project(const Point& p, const Vec3& v, const DomainSpec& d);

/// Maximum ambient step length accepted by retract for the domain.
double max_retraction_step(const DomainSpec& d);

/// Move p by a tangent ambient step and restore the constraint.
/// Throws StepSizeError when a Torus2 step is not shorter than 0.5.
Point retract(const Point& p, const Vec3& step, const DomainSpec& d);

/// N points drawn from the uniform surface measure (Sphere2, Torus2) or
/// uniformly from the cube of side 2 N^(1/3) centred at the origin (Free3).
Configuration random_configuration(const DomainSpec& d, std::size_t n, std::uint64_t seed);

/// Check that every point satisfies the invariants of the domain.
bool is_valid(const Point& p, const DomainSpec& d);

/// Smallest pairwise chordal distance; +inf for fewer than two points.
double min_pair_distance(std::span<const Vec3> x);

std::string to_string(const DomainSpec& d);

}  // namespace gsaudit
