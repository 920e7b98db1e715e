#include <benchmark/benchmark.h>

#include "torus2/char_functions.hpp"
#include "torus2/classification.hpp"
#include "torus2/cycle_colorings.hpp"
#include "torus2/orbit_space.hpp"
#include "torus2/quotient_complex.hpp"

using namespace torus2;

static void BM_EnumerateColorings(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cycles::enumerate_colorings(m, 3));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateColorings)->DenseRange(8, 16, 2)->Unit(benchmark::kMillisecond);

static void BM_BurnsideDihedral(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto lambda = cycles::enumerate_colorings(m, 3);
  const auto group = cycles::dihedral_actions(m);
  for (auto _ : state) benchmark::DoNotOptimize(cycles::burnside_orbit_count(lambda, group));
}
BENCHMARK(BM_BurnsideDihedral)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_ClosedFormB(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cycles::count_orbits_closed_form_B(m));
}
BENCHMARK(BM_ClosedFormB)->Arg(10)->Arg(100)->Arg(1000);

static void BM_ClosedFormC(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cycles::count_double_cosets_closed_form_C(m));
}
BENCHMARK(BM_ClosedFormC)->Arg(12)->Arg(360)->Arg(5040);

static void BM_PrismEnumeration(benchmark::State& state) {
  const auto p = space::build_prism();
  for (auto _ : state) benchmark::DoNotOptimize(charfn::enumerate_char_functions(p, 3));
}
BENCHMARK(BM_PrismEnumeration)->Unit(benchmark::kMicrosecond);

static void BM_PrismDoubleCosets(benchmark::State& state) {
  const auto p = space::build_prism();
  for (auto _ : state) benchmark::DoNotOptimize(charfn::count_double_cosets(p, 3));
}
BENCHMARK(BM_PrismDoubleCosets)->Unit(benchmark::kMillisecond);

static void BM_TorusDirectCount(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto h1 = classify::H1Model::torus_minus_disk();
  const auto p = space::build_surface_poset(space::SurfaceWithBoundary::torus_minus_disk(m));
  for (auto _ : state) benchmark::DoNotOptimize(classify::count_equivariant_classes(h1, p, 2));
}
BENCHMARK(BM_TorusDirectCount)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_SmallCoverCensus(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto lambda = cycles::enumerate_colorings(m, 3);
  for (auto _ : state) {
    for (const auto& l : lambda) benchmark::DoNotOptimize(cover::surface_type(cover::build_small_cover(m, l), l));
  }
}
BENCHMARK(BM_SmallCoverCensus)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
