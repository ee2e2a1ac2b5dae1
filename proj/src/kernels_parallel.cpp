#include <omp.h>

#include <cmath>
#include <limits>
#include <vector>

#include "gsaudit/kernels.hpp"
#include "gsaudit/pair_law.hpp"
#include "gsaudit/summation.hpp"

namespace gsaudit::kernels::parallel {

namespace {

// Below this many points the thread start-up costs more than the pair loop.
constexpr std::size_t kMinParallelPoints = 128;

bool go_parallel(std::size_t n) { return n >= kMinParallelPoints && !omp_in_parallel(); }

}  // namespace

double energy(std::span<const Vec3> x, const PotentialSpec& p) {
  return laws::visit(p, [&](auto law) {
    const std::size_t n = x.size();
    const std::size_t blocks = (n + kBlockRows - 1) / kBlockRows;
    std::vector<CompensatedSum> partial(blocks);
    int infinite = 0;

#pragma omp parallel for schedule(dynamic, 1) reduction(| : infinite) if (go_parallel(n))
    for (std::size_t b = 0; b < blocks; ++b) {
      CompensatedSum sum;
      const std::size_t end = std::min(n, (b + 1) * kBlockRows);
      for (std::size_t i = b * kBlockRows; i < end; ++i) {
        const Vec3 xi = x[i];
        for (std::size_t j = i + 1; j < n; ++j) {
          const double u = law.value(norm(xi - x[j]));
          if (std::isinf(u)) infinite = 1;
          else sum.add(u);
        }
      }
      partial[b] = sum;
    }

    if (infinite) return std::numeric_limits<double>::infinity();
    CompensatedSum total;
    for (const auto& s : partial) total.add(s);
    return total.value();
  });
}

bool gradient(std::span<const Vec3> x, const PotentialSpec& p, std::span<Vec3> out) {
  return laws::visit(p, [&](auto law) {
    const std::size_t n = x.size();
    int coincident = 0;

    // Full rows (both j < i and j > i) so each output is written by one thread.
#pragma omp parallel for schedule(static) reduction(| : coincident) if (go_parallel(n))
    for (std::size_t i = 0; i < n; ++i) {
      const Vec3 xi = x[i];
      Vec3 g{};
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const Vec3 d = xi - x[j];
        const double r = norm(d);
        if (!(r > 0.0)) {
          coincident = 1;
          continue;
        }
        g += (law.slope(r) / r) * d;
      }
      out[i] = g;
    }
    return coincident == 0;
  });
}

}  // namespace gsaudit::kernels::parallel
