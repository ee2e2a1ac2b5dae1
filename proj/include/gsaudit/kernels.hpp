#pragma once

// O(N^2) pair-sum kernels over embedded (ambient) coordinates.
//
// `serial` is the straightforward reference: one compensated sum over pairs
// in (i, j) order and a symmetric scatter for the gradient. It is kept for
// testing and benchmarking.
//
// `parallel` is what the library uses. Rows are grouped into fixed blocks of
// kBlockRows; each block is reduced with its own compensated sum and the
// block partials are merged in block order, so the result does not depend on
// the number of threads. It agrees with `serial` to ~1e-15 relative.

#include <cstddef>
#include <span>

#include "gsaudit/potentials.hpp"
#include "gsaudit/vec3.hpp"

namespace gsaudit::kernels {

inline constexpr std::size_t kBlockRows = 16;

namespace serial {

double energy(std::span<const Vec3> x, const PotentialSpec& p);

/// Ambient (unprojected) gradient into `out`. Returns false on coincident points.
bool gradient(std::span<const Vec3> x, const PotentialSpec& p, std::span<Vec3> out);

}  // namespace serial

namespace parallel {

double energy(std::span<const Vec3> x, const PotentialSpec& p);

bool gradient(std::span<const Vec3> x, const PotentialSpec& p, std::span<Vec3> out);

}  // namespace parallel

}  // namespace gsaudit::kernels
