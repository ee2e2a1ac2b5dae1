#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "gsaudit/errors.hpp"
#include "gsaudit/potentials.hpp"
#include "test_support.hpp"

using namespace gsaudit;
using doctest::Approx;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

std::vector<PotentialSpec> compact_kernels() {
  return {PotentialSpec::log_coulomb(), PotentialSpec::riesz(-1), PotentialSpec::riesz(-2.5),
          PotentialSpec::riesz(1.0), PotentialSpec::riesz(0.5), PotentialSpec::coulomb_dim(4)};
}

}  // namespace

TEST_CASE("pair_energy values") {
  CHECK(pair_energy(PotentialSpec::log_coulomb(), 1.0) == 0.0);
  CHECK(pair_energy(PotentialSpec::riesz(-1), 2.0) == 0.5);
  CHECK(pair_energy(PotentialSpec::riesz(1), 3.0) == -3.0);
  // r^6 = 2 minimises r^-12 - r^-6 at 1/4 - 1/2.
  CHECK(pair_energy(PotentialSpec::lennard_jones(), std::pow(2.0, 1.0 / 6.0)) == Approx(-0.25).epsilon(1e-14));
  CHECK(pair_energy(PotentialSpec::coulomb_dim(5), 2.0) == Approx(0.125).epsilon(1e-15));
}

TEST_CASE("pair_energy at contact") {
  CHECK(pair_energy(PotentialSpec::log_coulomb(), 0.0) == kInf);
  CHECK(pair_energy(PotentialSpec::riesz(-1), 0.0) == kInf);
  CHECK(pair_energy(PotentialSpec::coulomb_dim(3), 0.0) == kInf);
  CHECK(pair_energy(PotentialSpec::lennard_jones(), 0.0) == kInf);
  CHECK(pair_energy(PotentialSpec::riesz(0.5), 0.0) == 0.0);
  CHECK(pair_energy(PotentialSpec::riesz(1.5), 0.0) == 0.0);
  CHECK_THROWS_AS(pair_energy(PotentialSpec::riesz(-1), -1.0), ValidationError);
}

TEST_CASE("potential validation") {
  CHECK_THROWS_AS(PotentialSpec::riesz(2.0), ValidationError);
  CHECK_THROWS_AS(PotentialSpec::riesz(0.0), ValidationError);
  CHECK_THROWS_AS(PotentialSpec::riesz(std::nan("")), ValidationError);
  CHECK_THROWS_AS(PotentialSpec::coulomb_dim(2), ValidationError);
  CHECK_THROWS_AS(validate_combination(DomainSpec::sphere(), PotentialSpec::lennard_jones()), ValidationError);
  CHECK_THROWS_AS(validate_combination(DomainSpec::torus(2.0), PotentialSpec::lennard_jones()), ValidationError);
  CHECK_NOTHROW(validate_combination(DomainSpec::free3(), PotentialSpec::lennard_jones()));
  CHECK_THROWS_AS(validate_for_minimization(DomainSpec::free3(), PotentialSpec::riesz(-1)), ValidationError);
}

TEST_CASE("CoulombDim(D) and Riesz(2 - D) agree bit for bit") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> r(1e-3, 3.0);
  for (int d = 3; d <= 7; ++d) {
    const auto a = PotentialSpec::coulomb_dim(d);
    const auto b = PotentialSpec::riesz(2.0 - d);
    for (int k = 0; k < 200; ++k) {
      const double x = r(gen);
      CHECK(pair_energy(a, x) == pair_energy(b, x));
      CHECK(pair_slope(a, x) == pair_slope(b, x));
    }
  }
}

TEST_CASE("Riesz family tends to the log kernel as s -> 0") {
  const double s = 1e-6;
  const auto riesz = PotentialSpec::riesz(-s);  // value r^-s
  for (double r = 0.1; r <= 2.0; r += 0.05) {
    const double limit = (pair_energy(riesz, r) - 1.0) / s;
    CHECK(std::abs(limit - pair_energy(PotentialSpec::log_coulomb(), r)) < 1e-5);
  }
}

TEST_CASE("pair_slope matches a central difference") {
  for (const auto& p : {PotentialSpec::log_coulomb(), PotentialSpec::riesz(-1), PotentialSpec::riesz(1.3),
                        PotentialSpec::coulomb_dim(4), PotentialSpec::lennard_jones()}) {
    for (double r : {0.7, 1.0, 1.5}) {
      const double h = 1e-6;
      const double fd = (pair_energy(p, r + h) - pair_energy(p, r - h)) / (2 * h);
      CHECK(pair_slope(p, r) == Approx(fd).epsilon(1e-7));
    }
  }
}

TEST_CASE("total_energy") {
  const auto antipodal = testing::sphere_config({{0, 0, 1}, {0, 0, -1}});
  CHECK(total_energy(antipodal, PotentialSpec::riesz(-1)) == 0.5);
  CHECK(total_energy(antipodal, PotentialSpec::log_coulomb()) == Approx(-std::log(2.0)).epsilon(1e-15));
  CHECK(total_energy(antipodal, PotentialSpec::log_coulomb()) == Approx(-0.6931472).epsilon(1e-7));

  // Six edges of length sqrt(8/3).
  CHECK(total_energy(testing::tetrahedron(), PotentialSpec::riesz(-1)) ==
        Approx(6.0 / std::sqrt(8.0 / 3.0)).epsilon(1e-14));
  CHECK(total_energy(testing::tetrahedron(), PotentialSpec::riesz(-1)) == Approx(3.6742346).epsilon(1e-7));

  const auto single = testing::sphere_config({{1, 0, 0}});
  CHECK_THROWS_AS(total_energy(single, PotentialSpec::riesz(-1)), ValidationError);
  CHECK_THROWS_AS(total_energy(antipodal, PotentialSpec::lennard_jones()), ValidationError);

  const auto twice = testing::sphere_config({{1, 0, 0}, {1, 0, 0}, {0, 1, 0}});
  CHECK(total_energy(twice, PotentialSpec::riesz(-1)) == kInf);
  CHECK(std::isfinite(total_energy(twice, PotentialSpec::riesz(0.5))));
}

TEST_CASE("total_energy invariances") {
  std::mt19937_64 gen(99);
  for (const auto& p : compact_kernels()) {
    const auto c = random_configuration(DomainSpec::sphere(), 30, gen());
    const double e = total_energy(c, p);
    CHECK(e == Approx(testing::brute_energy(c, p)).epsilon(1e-13));

    auto shuffled = c;
    std::shuffle(shuffled.points.begin(), shuffled.points.end(), gen);
    CHECK(std::abs(total_energy(shuffled, p) - e) <= 1e-15 * std::max(1.0, std::abs(e)));

    const auto r = testing::rotated(c, testing::random_rotation(gen));
    CHECK(std::abs(total_energy(r, p) - e) <= 1e-10 * std::max(1.0, std::abs(e)));
  }
}

TEST_CASE("energy_gradient at symmetric configurations") {
  const auto antipodal = testing::sphere_config({{0.2, -0.3, 1}, {-0.2, 0.3, -1}});
  for (const auto& p : compact_kernels()) {
    for (const auto& g : energy_gradient(antipodal, p)) CHECK(norm(g) < 1e-12);
  }
  for (const auto& g : energy_gradient(testing::tetrahedron(), PotentialSpec::riesz(-1))) {
    CHECK(norm(g) < 1e-10);
  }
  for (const auto& g : energy_gradient(testing::icosahedron(), PotentialSpec::log_coulomb())) {
    CHECK(norm(g) < 1e-10);
  }
}

TEST_CASE("energy_gradient is tangent") {
  const auto torus = DomainSpec::torus(1.414);
  const auto c = random_configuration(torus, 12, 4);
  const auto g = energy_gradient(c, PotentialSpec::riesz(-1));
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(std::abs(dot(g[i], surface_normal(c.points[i], torus))) < 1e-12 * std::max(1.0, norm(g[i])));
  }
}

TEST_CASE("energy_gradient rejects coincident points") {
  const auto c = testing::sphere_config({{1, 0, 0}, {1, 0, 0}, {0, 0, 1}});
  CHECK_THROWS_AS(energy_gradient(c, PotentialSpec::riesz(-1)), GradientUndefinedError);
  CHECK_THROWS_AS(energy_gradient(c, PotentialSpec::riesz(0.5)), GradientUndefinedError);
}

TEST_CASE("energy_gradient matches finite differences on every domain") {
  std::mt19937_64 gen(31337);
  struct Case {
    DomainSpec d;
    PotentialSpec p;
  };
  const std::vector<Case> cases = {
      {DomainSpec::sphere(), PotentialSpec::log_coulomb()},
      {DomainSpec::sphere(), PotentialSpec::riesz(-1)},
      {DomainSpec::sphere(), PotentialSpec::riesz(0.7)},
      {DomainSpec::sphere(), PotentialSpec::coulomb_dim(5)},
      {DomainSpec::torus(1.414), PotentialSpec::log_coulomb()},
      {DomainSpec::torus(1.414), PotentialSpec::riesz(-1)},
      {DomainSpec::torus(2.5), PotentialSpec::riesz(1.5)},
      {DomainSpec::free3(), PotentialSpec::lennard_jones()},
      {DomainSpec::free3(), PotentialSpec::riesz(-1)},
  };
  for (const auto& k : cases) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto c = random_configuration(k.d, 8, gen());
      const auto dir = testing::random_tangent_field(c, gen);
      const double analytic = testing::dot_fields(energy_gradient(c, k.p), dir);
      const double fd = testing::fd_directional_derivative(c, k.p, dir);
      INFO(to_string(k.d), " ", to_string(k.p), " analytic=", analytic, " fd=", fd);
      CHECK(std::abs(analytic - fd) <= 1e-6 * std::max(std::abs(analytic), 1e-3));
    }
  }
}
