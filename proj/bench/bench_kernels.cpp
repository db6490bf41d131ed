#include <benchmark/benchmark.h>

#include <map>
#include <numeric>

#include "projlab/kernels.hpp"
#include "projlab/linear.hpp"
#include "projlab/projspace.hpp"

using namespace projlab;

namespace {

const SubspaceSet& p2(int n) {
  static std::map<int, SubspaceSet> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enum_projective(Ambient(2, n))).first;
  return it->second;
}

template <bool Parallel>
void distance_matrix(benchmark::State& state) {
  const auto& set = p2(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? kernels::distance_matrix(set) : kernels::distance_matrix_serial(set));
  state.SetItemsProcessed(state.iterations() * set.size() * set.size());
}

template <bool Parallel>
void hull_counts(benchmark::State& state) {
  const Ambient a(2, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? kernels::trivial_hull_counts(a) : kernels::trivial_hull_counts_serial(a));
}

template <bool Parallel>
void disjointness(benchmark::State& state) {
  const Ambient a(2, static_cast<int>(state.range(0)));
  const auto l = enum_grassmannian(a, a.n() / 2), r = enum_grassmannian(a, a.n() - a.n() / 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? kernels::disjointness_adjacency(l, r)
                                      : kernels::disjointness_adjacency_serial(l, r));
}

template <bool Parallel>
void associativity(benchmark::State& state) {
  const auto t = build_basis_code(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? kernels::first_associativity_violation(t.table(), t.size())
                                      : kernels::first_associativity_violation_serial(t.table(), t.size()));
}

template <bool Parallel>
void isometry(benchmark::State& state) {
  const auto& set = p2(static_cast<int>(state.range(0)));
  const auto d = kernels::distance_matrix(set);
  std::vector<std::size_t> image(set.size());
  std::iota(image.begin(), image.end(), 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? kernels::first_isometry_violation(image, d)
                                      : kernels::first_isometry_violation_serial(image, d));
}

}  // namespace

BENCHMARK(distance_matrix<false>)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(distance_matrix<true>)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(hull_counts<false>)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(hull_counts<true>)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(disjointness<false>)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(disjointness<true>)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(associativity<false>)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(associativity<true>)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(isometry<false>)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(isometry<true>)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
