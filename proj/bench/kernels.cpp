#include <benchmark/benchmark.h>

#include <random>

#include "dowker/apsp.hpp"
#include "dowker/dowker.hpp"
#include "dowker/reduce.hpp"
#include "dowker/witness.hpp"

using namespace dowker;

namespace {

Network sparse(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<int> weight(1, 20);
  Network g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (i != j && coin(rng) < 4.0 / static_cast<double>(n)) g.set_weight(i, j, Extended(weight(rng)));
  return g;
}

template <auto Kernel>
void apsp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Network g = sparse(n, 1);
  const auto w = g.matrix();
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(n, w));
}

template <auto Kernel>
void edges(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Network p = path_completion(sparse(n, 2));
  const auto d = p.matrix();
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(n, d, Extended::infinity()));
}

template <auto Kernel>
void simplices(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Network p = path_completion(sparse(n, 3));
  const auto d = p.matrix();
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(n, d, 2, Extended::infinity()));
}

template <auto Reduction>
void reduction(benchmark::State& state) {
  const Filtration f = dowker_filtration(sparse(static_cast<std::size_t>(state.range(0)), 4));
  for (auto _ : state) benchmark::DoNotOptimize(Reduction(f, 1));
}

}  // namespace

BENCHMARK(apsp<kernels::floyd_warshall_serial>)->Arg(64)->Arg(256);
BENCHMARK(apsp<kernels::floyd_warshall_parallel>)->Arg(64)->Arg(256);
BENCHMARK(apsp<kernels::dijkstra_all_serial>)->Arg(64)->Arg(256);
BENCHMARK(apsp<kernels::dijkstra_all_parallel>)->Arg(64)->Arg(256);
BENCHMARK(edges<kernels::edge_values_serial>)->Arg(64)->Arg(256);
BENCHMARK(edges<kernels::edge_values_parallel>)->Arg(64)->Arg(256);
BENCHMARK(simplices<kernels::witness_simplices_serial>)->Arg(32)->Arg(64);
BENCHMARK(simplices<kernels::witness_simplices_parallel>)->Arg(32)->Arg(64);
BENCHMARK(simplices<kernels::cone_simplices_serial>)->Arg(32)->Arg(64);
BENCHMARK(simplices<kernels::cone_simplices_parallel>)->Arg(32)->Arg(64);
BENCHMARK(reduction<reduce>)->Arg(40)->Arg(80);
BENCHMARK(reduction<reduce_homology>)->Arg(40)->Arg(80);

BENCHMARK_MAIN();
