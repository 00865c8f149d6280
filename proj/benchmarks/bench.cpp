#include <benchmark/benchmark.h>

#include "ggm/entanglement.hpp"
#include "ggm/hamiltonian.hpp"
#include "ggm/lanczos.hpp"
#include "ggm/propagator.hpp"
#include "ggm/state.hpp"

namespace {

ggm::ModelParams afm_params(int n, double alpha, double delta) {
  ggm::ModelParams p;
  p.n_sites = n;
  p.alpha = alpha;
  p.jx = p.jy = 1.0;
  p.delta = delta;
  return p;
}

void BM_Apply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto op = ggm::build_model(afm_params(n, 1.0, 0.5));
  const auto psi = ggm::random_state(n, 7);
  std::vector<ggm::Complex> out(psi.dim());
  for (auto _ : state) {
    op.apply(psi.amplitudes(), out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Apply)->DenseRange(8, 16, 2);

void BM_GroundState(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto op = ggm::build_model(afm_params(n, 1.0, 0.5));
  for (auto _ : state) {
    auto result = ggm::ground_state(op);
    benchmark::DoNotOptimize(result.energy);
  }
}
BENCHMARK(BM_GroundState)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

void BM_Ggm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto psi = ggm::random_state(n, 11);
  for (auto _ : state) {
    auto result = ggm::compute_ggm(psi);
    benchmark::DoNotOptimize(result.value);
  }
}
BENCHMARK(BM_Ggm)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

void BM_EvolveUnitTime(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto op = ggm::build_model(afm_params(n, 1.0, 0.5));
  const auto psi = ggm::product_plus_state(n);
  for (auto _ : state) {
    auto out = ggm::evolve(op, psi, 1.0);
    benchmark::DoNotOptimize(out.amplitudes().data());
  }
}
BENCHMARK(BM_EvolveUnitTime)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
