#include <algorithm>

#include <benchmark/benchmark.h>

#include <tubealg/builtins.hpp>

using namespace tubealg;

namespace {

const char* const kIds[] = {"fib", "rep-s3", "ty:z3:1:+", "ty:z2xz2:hyp:+"};

void BM_DeriveTube(benchmark::State& state) {
  const auto cat = load_builtin(kIds[state.range(0)]).fusion.value();
  state.SetLabel(cat.name);
  for (auto _ : state) benchmark::DoNotOptimize(derive_tube(cat));
}
BENCHMARK(BM_DeriveTube)->DenseRange(0, 3);

void BM_DecomposeIrreps(benchmark::State& state) {
  const auto t = load_builtin(kIds[state.range(0)]).tube;
  state.SetLabel(t.name());
  for (auto _ : state) benchmark::DoNotOptimize(decompose_irreps(t));
}
BENCHMARK(BM_DecomposeIrreps)->DenseRange(0, 3);

void BM_SolveChannelBasis(benchmark::State& state) {
  const auto b = load_builtin("rep-s3");
  const int pi = b.tube.object_index("pi");
  for (auto _ : state) benchmark::DoNotOptimize(solve_channel_basis(b.tube, "pi", pi));
}
BENCHMARK(BM_SolveChannelBasis);

void BM_Probabilities(benchmark::State& state) {
  const auto b = load_builtin("ty:z2xz2:hyp:+");
  const int m = b.tube.object_index("m");
  const auto basis = std::get<ChannelBasis>(solve_channel_basis(b.tube, "m", m));
  const auto& u = *std::find_if(b.charges.begin(), b.charges.end(), [&](const auto& c) { return c.sector_dims[m] > 0; });
  state.SetLabel(u.name);
  const ComplexVector psi = ComplexVector::Ones(u.sector_dims[m]);
  for (auto _ : state) benchmark::DoNotOptimize(transition_probabilities(u, basis, psi));
}
BENCHMARK(BM_Probabilities);

}  // namespace
BENCHMARK_MAIN();
