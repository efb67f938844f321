#include <benchmark/benchmark.h>

#include "lelkit/charpoly.hpp"
#include "lelkit/harness.hpp"
#include "lelkit/invariants.hpp"
#include "lelkit/spectra.hpp"
#include "lelkit/tree_enum.hpp"
#include "lelkit/vieta.hpp"

using namespace lelkit;

namespace {

void BM_CharpolyPath(benchmark::State& state) {
  const Graph g = path_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(laplacian_coefficients(g));
}
BENCHMARK(BM_CharpolyPath)->RangeMultiplier(2)->Range(8, 64);

void BM_CharpolyComplete(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  const Graph g(n, std::move(edges));
  for (auto _ : state) benchmark::DoNotOptimize(laplacian_coefficients(g));
}
BENCHMARK(BM_CharpolyComplete)->Arg(16)->Arg(32);

void BM_LaplacianSpectrum(benchmark::State& state) {
  const Graph g = path_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(laplacian_spectrum(g));
}
BENCHMARK(BM_LaplacianSpectrum)->RangeMultiplier(2)->Range(8, 128);

void BM_Invariants(benchmark::State& state) {
  const Graph g = star_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_invariants(g));
}
BENCHMARK(BM_Invariants)->Arg(16)->Arg(64);

void BM_FreeTrees(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::size_t count = 0;
  for (auto _ : state) {
    count = all_free_trees(n).size();
    benchmark::DoNotOptimize(count);
  }
  state.counters["trees"] = static_cast<double>(count);
}
BENCHMARK(BM_FreeTrees)->DenseRange(10, 16, 2)->Unit(benchmark::kMillisecond);

void BM_CanonicalCode(benchmark::State& state) {
  const Graph g = tree_from_level_sequence(all_free_trees(static_cast<std::size_t>(state.range(0))).back());
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_CanonicalCode)->Arg(12)->Arg(18);

void BM_ForwardInverseJacobian(benchmark::State& state) {
  RootSampler sampler(7);
  const auto r = PreparedRoots::make(sampler.draw(static_cast<std::size_t>(state.range(0)), 0.1, 10.0, 0.3));
  for (auto _ : state) {
    const JacobianMatrix fwd = forward_jacobian(r);
    const JacobianMatrix inv = inverse_jacobian_closed_form(r);
    benchmark::DoNotOptimize(max_deviation_from_identity(multiply(fwd, inv)));
  }
}
BENCHMARK(BM_ForwardInverseJacobian)->DenseRange(2, 8, 3);

void BM_LelGradient(benchmark::State& state) {
  RootSampler sampler(8);
  const auto r = PreparedRoots::make(sampler.draw(static_cast<std::size_t>(state.range(0)), 0.1, 10.0, 0.3));
  for (auto _ : state) benchmark::DoNotOptimize(lel_gradient_wrt_coeffs(r));
}
BENCHMARK(BM_LelGradient)->DenseRange(2, 8, 3);

void BM_RootsFromCoeffs(benchmark::State& state) {
  RootSampler sampler(9);
  const auto r = PreparedRoots::make(sampler.draw(static_cast<std::size_t>(state.range(0)), 0.1, 10.0, 0.3));
  const RealCoeffs c = elementary_symmetric(r);
  for (auto _ : state) benchmark::DoNotOptimize(roots_from_coeffs(c));
}
BENCHMARK(BM_RootsFromCoeffs)->DenseRange(2, 8, 3);

}  // namespace

BENCHMARK_MAIN();
