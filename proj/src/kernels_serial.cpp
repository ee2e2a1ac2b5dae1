#include <cmath>
#include <limits>

#include "gsaudit/kernels.hpp"
#include "gsaudit/pair_law.hpp"
#include "gsaudit/summation.hpp"

namespace gsaudit::kernels::serial {

double energy(std::span<const Vec3> x, const PotentialSpec& p) {
  return laws::visit(p, [&](auto law) {
    CompensatedSum sum;
    bool infinite = false;
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double u = law.value(norm(x[i] - x[j]));
        if (std::isinf(u)) infinite = true;
        else sum.add(u);
      }
    }
    return infinite ? std::numeric_limits<double>::infinity() : sum.value();
  });
}

bool gradient(std::span<const Vec3> x, const PotentialSpec& p, std::span<Vec3> out) {
  return laws::visit(p, [&](auto law) {
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) out[i] = Vec3{};
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const Vec3 d = x[i] - x[j];
        const double r = norm(d);
        if (!(r > 0.0)) return false;
        const Vec3 f = (law.slope(r) / r) * d;
        out[i] += f;
        out[j] -= f;
      }
    }
    return true;
  });
}

}  // namespace gsaudit::kernels::serial
