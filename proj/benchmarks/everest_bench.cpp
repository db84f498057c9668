#include <benchmark/benchmark.h>

#include "spinaltri/birkhoff.hpp"
#include "spinaltri/everest.hpp"

using namespace spinaltri;

static void BM_EverestFamilies(benchmark::State& state) {
    const auto params = EverestParams::make(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(vertex_families(params).everest.points.size());
}
BENCHMARK(BM_EverestFamilies)->Args({2, 2})->Args({3, 3})->Args({4, 4});

static void BM_EverestVolume(benchmark::State& state) {
    const auto params = EverestParams::make(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    const auto method = static_cast<VolumeMethod>(state.range(2));
    for (auto _ : state) benchmark::DoNotOptimize(everest_volume(params, method));
}
BENCHMARK(BM_EverestVolume)
    ->Args({2, 2, static_cast<long>(VolumeMethod::Formula)})
    ->Args({1, 3, static_cast<long>(VolumeMethod::Hull)})
    ->Args({2, 1, static_cast<long>(VolumeMethod::Lifting)})
    ->Args({2, 2, static_cast<long>(VolumeMethod::Hull)})
    ->Unit(benchmark::kMillisecond);

static void BM_BirkhoffProjection(benchmark::State& state) {
    const BirkhoffContext ctx = birkhoff_context(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(projected_birkhoff(ctx).size());
}
BENCHMARK(BM_BirkhoffProjection)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
