#include <benchmark/benchmark.h>

#include "tassp/approx.hpp"
#include "tassp/generate.hpp"
#include "tassp/oracle.hpp"
#include "tassp/schedule.hpp"
#include "tassp/split.hpp"
#include "tassp/tsp.hpp"

using namespace tassp;

namespace {

Instance bench_instance(int n, int k, int m, std::uint64_t seed = 99) {
  GeneratorParams params;
  params.n = n;
  params.k = k;
  params.m = m;
  params.seed = seed;
  return generate(params);
}

void bm_christofides(benchmark::State& state) {
  const Instance inst = bench_instance(static_cast<int>(state.range(0)), 4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(christofides(inst.metric()));
}
BENCHMARK(bm_christofides)->Arg(11)->Arg(25)->Arg(49);

void bm_held_karp(benchmark::State& state) {
  const Instance inst = bench_instance(static_cast<int>(state.range(0)), 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(held_karp(inst.metric()));
}
BENCHMARK(bm_held_karp)->Arg(9)->Arg(12)->Arg(14);

void bm_greedy_schedule(benchmark::State& state) {
  const Instance inst = bench_instance(static_cast<int>(state.range(0)), 5, 2);
  const Tour tour = christofides(inst.metric());
  const RouteSet routes = splitour(tour, inst.k(), inst.metric());
  for (auto _ : state) benchmark::DoNotOptimize(greedy_schedule(inst, routes));
}
BENCHMARK(bm_greedy_schedule)->Arg(11)->Arg(49);

void bm_approx(benchmark::State& state) {
  const Instance inst = bench_instance(static_cast<int>(state.range(0)), 5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(approx(inst));
}
BENCHMARK(bm_approx)->Arg(11)->Arg(49);

void bm_oracle(benchmark::State& state) {
  const Instance inst =
      bench_instance(static_cast<int>(state.range(0)), 3, 2, 7);
  for (auto _ : state) {
    const ExactResult result = exact_solve(inst);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(bm_oracle)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
