#include <benchmark/benchmark.h>

#include <random>

#include "gkm2/cohomology.hpp"
#include "gkm2/examples.hpp"
#include "gkm2/symdiff.hpp"

using namespace gkm2;

namespace {

F2Matrix random_square(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution bit(0.5);
  F2Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (bit(rng)) m.set(r, c);
  return m;
}

void BM_RankPacked(benchmark::State& state) {
  const F2Matrix m = random_square(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankPacked)->RangeMultiplier(2)->Range(64, 1024);

void BM_RankNaive(benchmark::State& state) {
  const F2Matrix m = random_square(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(naive::rank(m));
}
BENCHMARK(BM_RankNaive)->RangeMultiplier(2)->Range(64, 512);

// Hilbert data through degree 2n+2 on a fresh engine each iteration.
void BM_HilbertHypercube(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MomentGraph g = examples::hypercube(n);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert(g, 2 * n + 2, Mode::gkm).dims);
}
BENCHMARK(BM_HilbertHypercube)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_GradedBasisPermutahedron(benchmark::State& state) {
  const MomentGraph g = examples::permutahedron(static_cast<int>(state.range(0)));
  const auto d = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(CohomologyEngine(g, Mode::gkm).graded_basis(d).classes.size());
}
BENCHMARK(BM_GradedBasisPermutahedron)->Args({3, 4})->Args({4, 3})->Args({4, 6})->Unit(benchmark::kMillisecond);

void BM_GhCycle(benchmark::State& state) {
  const MomentGraph g = examples::gh_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert(g, 6, Mode::gh).dims);
}
BENCHMARK(BM_GhCycle)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

void BM_ClosureHypercube(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CohomologyEngine engine(examples::hypercube(n), Mode::gkm);
  for (auto _ : state) benchmark::DoNotOptimize(engine.check_closure(2 * n).pairs);
}
BENCHMARK(BM_ClosureHypercube)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_RelaxedComplete(benchmark::State& state) {
  const SymDiffInstance inst = instance_from_graph(examples::complete_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(solve_relaxed(inst).class_dimension);
}
BENCHMARK(BM_RelaxedComplete)->DenseRange(3, 6);

}  // namespace

BENCHMARK_MAIN();
