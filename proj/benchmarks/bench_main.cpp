#include <benchmark/benchmark.h>

#include <random>

#include "gaugelat/coupling.hpp"
#include "gaugelat/fractal.hpp"
#include "gaugelat/gauge.hpp"
#include "gaugelat/geometry.hpp"
#include "gaugelat/hamiltonian.hpp"
#include "gaugelat/spectral.hpp"

using namespace gaugelat;

namespace {

HermitianOperator chain_operator(int N) {
  return assemble(build_dimer_chain(N, 3, 1.66, 0.1), CouplingModel{1.0, 1.66});
}

void BM_Assemble(benchmark::State& state) {
  const PolymerLattice lat = build_dimer_chain(static_cast<int>(state.range(0)), 3, 1.66, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(assemble(lat, CouplingModel{1.0, 1.66}));
}
BENCHMARK(BM_Assemble)->Arg(101)->Arg(201)->Arg(401);

void BM_Eigenvalues(benchmark::State& state) {
  const HermitianOperator H = chain_operator(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(H));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Eigenvalues)->RangeMultiplier(2)->Range(64, 512)->Complexity(benchmark::oNCubed)->Unit(benchmark::kMillisecond);

void BM_Eigendecompose(benchmark::State& state) {
  const HermitianOperator H = chain_operator(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eigendecompose(H));
}
BENCHMARK(BM_Eigendecompose)->Arg(101)->Arg(201)->Unit(benchmark::kMillisecond);

void BM_FluxSweep(benchmark::State& state) {
  FluxSweepSpec spec;
  DimerChainParams d;
  d.N = 201;
  spec.family = d;
  spec.filter = BandFilter::symmetric;
  for (int p = 0; p < 16; ++p) spec.p_values.push_back(p);
  spec.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(flux_sweep(spec));
}
BENCHMARK(BM_FluxSweep)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_HedgehogPortrait(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PolymerLattice lat = build_hedgehog_lattice(n, 2.9, 1.3);
  const HermitianOperator H = assemble(lat, CouplingModel{1.0, 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(field_strength_bz(vector_potential(bond_log_field(H, lat))));
}
BENCHMARK(BM_HedgehogPortrait)->Arg(10)->Arg(20);

void BM_BoxCounting(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2, 2);
  std::vector<double> pts(static_cast<std::size_t>(state.range(0)));
  for (double& x : pts) x = u(rng);
  for (auto _ : state) benchmark::DoNotOptimize(box_counting_dimension(pts));
}
BENCHMARK(BM_BoxCounting)->Arg(200)->Arg(2000);

}  // namespace
BENCHMARK_MAIN();
