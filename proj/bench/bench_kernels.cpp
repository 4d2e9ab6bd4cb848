// Serial reference vs OpenMP for the data-parallel kernels.

#include <benchmark/benchmark.h>

#include "potts/bifurcation.hpp"
#include "potts/kernels.hpp"

using namespace potts;

namespace {

const ModelParams kParams(2.75, AprioriMeasure(0.31, 0.33, 0.36));

void BM_NewtonSeeds(benchmark::State& state, bool parallel) {
    const auto seeds = kernels::barycentric_lattice(int(state.range(0)), 1e-3);
    const kernels::NewtonOptions opts;
    for (auto _ : state) {
        auto r = parallel ? kernels::newton_from_seeds_omp(kParams, seeds, opts)
                          : kernels::newton_from_seeds_serial(kParams, seeds, opts);
        benchmark::DoNotOptimize(r.data());
    }
    state.SetItemsProcessed(state.iterations() * std::int64_t(seeds.size()));
}

void BM_GridArgmin(benchmark::State& state, bool parallel) {
    const auto points = kernels::barycentric_lattice(int(state.range(0)), 1e-4);
    for (auto _ : state) {
        auto r = parallel ? kernels::grid_argmin_omp(kParams, points) : kernels::grid_argmin_serial(kParams, points);
        benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(state.iterations() * std::int64_t(points.size()));
}

void BM_SurfacePatches(benchmark::State& state, bool parallel) {
    const int n = int(state.range(0));
    for (auto _ : state) {
        auto r = parallel ? surface_patches(n) : surface_patches_serial(n);
        benchmark::DoNotOptimize(r.first.samples.data());
    }
}

} // namespace

BENCHMARK_CAPTURE(BM_NewtonSeeds, serial, false)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_NewtonSeeds, omp, true)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_GridArgmin, serial, false)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_GridArgmin, omp, true)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_SurfacePatches, serial, false)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_SurfacePatches, omp, true)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
