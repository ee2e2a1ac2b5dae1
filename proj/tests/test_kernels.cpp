#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <omp.h>

#include <cmath>
#include <limits>

#include "gsaudit/kernels.hpp"
#include "test_support.hpp"

using namespace gsaudit;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("parallel energy agrees with the serial reference") {
  for (const auto& p : {PotentialSpec::log_coulomb(), PotentialSpec::riesz(-1), PotentialSpec::riesz(0.5),
                        PotentialSpec::coulomb_dim(4)}) {
    for (std::size_t n : {2u, 3u, 17u, 130u, 1000u}) {
      const auto x = embed_all(random_configuration(DomainSpec::sphere(), n, n * 7 + 1));
      CHECK(rel(kernels::parallel::energy(x, p), kernels::serial::energy(x, p)) <= 1e-12);
    }
  }
  const auto lj = embed_all(random_configuration(DomainSpec::free3(), 300, 3));
  const auto pot = PotentialSpec::lennard_jones();
  CHECK(rel(kernels::parallel::energy(lj, pot), kernels::serial::energy(lj, pot)) <= 1e-12);
}

TEST_CASE("parallel gradient agrees with the serial reference") {
  for (const auto& p : {PotentialSpec::log_coulomb(), PotentialSpec::riesz(-1), PotentialSpec::riesz(1.2)}) {
    for (std::size_t n : {2u, 40u, 500u}) {
      const auto x = embed_all(random_configuration(DomainSpec::torus(1.414), n, n));
      std::vector<Vec3> a(n), b(n);
      REQUIRE(kernels::parallel::gradient(x, p, a));
      REQUIRE(kernels::serial::gradient(x, p, b));
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(norm(a[i] - b[i]) <= 1e-12 * std::max(1.0, norm(b[i])));
      }
    }
  }
}

TEST_CASE("parallel kernels do not depend on the thread count") {
  const auto x = embed_all(random_configuration(DomainSpec::sphere(), 777, 12));
  const auto p = PotentialSpec::riesz(-1);
  const int saved = omp_get_max_threads();

  omp_set_num_threads(1);
  const double e1 = kernels::parallel::energy(x, p);
  std::vector<Vec3> g1(x.size());
  kernels::parallel::gradient(x, p, g1);

  omp_set_num_threads(4);
  const double e4 = kernels::parallel::energy(x, p);
  std::vector<Vec3> g4(x.size());
  kernels::parallel::gradient(x, p, g4);
  omp_set_num_threads(saved);

  CHECK(e1 == e4);
  CHECK(g1 == g4);
}

TEST_CASE("coincident points") {
  std::vector<Vec3> x = {{1, 0, 0}, {0, 1, 0}, {1, 0, 0}};
  const auto p = PotentialSpec::riesz(-1);
  CHECK(kernels::serial::energy(x, p) == std::numeric_limits<double>::infinity());
  CHECK(kernels::parallel::energy(x, p) == std::numeric_limits<double>::infinity());
  std::vector<Vec3> g(3);
  CHECK_FALSE(kernels::serial::gradient(x, p, g));
  CHECK_FALSE(kernels::parallel::gradient(x, p, g));

  const auto soft = PotentialSpec::riesz(1.0);
  CHECK(kernels::parallel::energy(x, soft) == kernels::serial::energy(x, soft));
  CHECK(std::isfinite(kernels::parallel::energy(x, soft)));
}
