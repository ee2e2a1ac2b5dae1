// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "gsaudit/geometry.hpp"
#include "gsaudit/kernels.hpp"
#include "gsaudit/potentials.hpp"

namespace {

using namespace gsaudit;

std::vector<Vec3> points(std::size_t n) { return embed_all(random_configuration(DomainSpec::sphere(), n, 1)); }

template <bool Parallel>
void BM_Energy(benchmark::State& state) {
  const auto x = points(static_cast<std::size_t>(state.range(0)));
  const auto p = PotentialSpec::riesz(-1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? kernels::parallel::energy(x, p) : kernels::serial::energy(x, p));
  }
  state.SetComplexityN(state.range(0));
}

template <bool Parallel>
void BM_Gradient(benchmark::State& state) {
  const auto x = points(static_cast<std::size_t>(state.range(0)));
  const auto p = PotentialSpec::riesz(-1);
  std::vector<Vec3> g(x.size());
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? kernels::parallel::gradient(x, p, g) : kernels::serial::gradient(x, p, g));
    benchmark::ClobberMemory();
  }
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_Energy<false>)->Name("energy/serial")->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_Energy<true>)->Name("energy/parallel")->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_Gradient<false>)->Name("gradient/serial")->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_Gradient<true>)->Name("gradient/parallel")->RangeMultiplier(4)->Range(64, 4096);

BENCHMARK_MAIN();
