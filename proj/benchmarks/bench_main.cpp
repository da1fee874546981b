#include "latwalk/elliptic.hpp"
#include "latwalk/lattice_catalog.hpp"
#include "latwalk/spectral.hpp"
#include "latwalk/walks.hpp"

#include <benchmark/benchmark.h>

namespace {

using latwalk::LatticeKind;

void walk_count_2d(benchmark::State& state)
{
    const auto kind = LatticeKind::make(LatticeKind::Id::full_z2);
    const auto g = latwalk::lattice_graph(kind);
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(latwalk::walk_count(g, latwalk::lattice_root(kind), m));
    }
}
BENCHMARK(walk_count_2d)->Arg(16)->Arg(32)->Arg(64);

void walk_table_3d(benchmark::State& state)
{
    const auto kind = LatticeKind::make(LatticeKind::Id::chamber3);
    const auto g = latwalk::lattice_graph(kind);
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(latwalk::walk_table(g, latwalk::lattice_root(kind), m));
    }
}
BENCHMARK(walk_table_3d)->Arg(12)->Arg(24);

void closed_form(benchmark::State& state)
{
    const auto kind = LatticeKind::make(LatticeKind::Id::z3_cartesian);
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(latwalk::closed_form_walks(kind, m));
    }
}
BENCHMARK(closed_form)->Arg(12)->Arg(40);

void elliptic_KE(benchmark::State& state)
{
    double k = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(latwalk::elliptic_KE(k));
        k = k < 0.99 ? k + 0.01 : 0.0;
    }
}
BENCHMARK(elliptic_KE);

void density_moment(benchmark::State& state)
{
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(latwalk::density_moment(latwalk::DensityKind::ww, m, 1e-10));
    }
}
BENCHMARK(density_moment)->Arg(0)->Arg(10);

void mellin_density_convolve(benchmark::State& state)
{
    const auto [f, g] = latwalk::density_factors(latwalk::DensityKind::wa);
    for (auto _ : state) {
        benchmark::DoNotOptimize(latwalk::mellin_density_convolve(f, g, 1.7, 1e-10));
    }
}
BENCHMARK(mellin_density_convolve);

void path_spectrum(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(latwalk::path_spectrum(n));
    }
}
BENCHMARK(path_spectrum)->Arg(4)->Arg(12);

} // namespace

BENCHMARK_MAIN();
