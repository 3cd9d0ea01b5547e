#include <benchmark/benchmark.h>

#include "pp/cartan.hpp"

namespace {

pp::SimplicialComplex instance(int which) {
    switch (which) {
        case 0: return pp::families::cycle(8);
        case 1: return pp::families::octahedron();
        case 2: return pp::families::rp2_6();
        default: return pp::join(pp::families::cycle(5), pp::families::discrete(3));
    }
}

const char* instance_name(int which) {
    static const char* names[] = {"cycle8", "octahedron", "rp2_6", "cycle5*3pts"};
    return names[which];
}

void BM_ReferenceFull(benchmark::State& state) {
    auto k = instance(static_cast<int>(state.range(0)));
    auto p = pp::PairDecomposition::uniform(k.ground().max(), pp::builtin("mf-cp3", pp::Field::rationals()), pp::Field::rationals());
    state.SetLabel(instance_name(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(pp::reference::full_series(k, p));
}

void BM_ParallelFull(benchmark::State& state) {
    auto k = instance(static_cast<int>(state.range(0)));
    auto p = pp::PairDecomposition::uniform(k.ground().max(), pp::builtin("mf-cp3", pp::Field::rationals()), pp::Field::rationals());
    pp::EngineOptions opts;
    opts.threads = static_cast<int>(state.range(1));
    state.SetLabel(std::string(instance_name(static_cast<int>(state.range(0)))) + " threads=" + std::to_string(opts.threads));
    for (auto _ : state) benchmark::DoNotOptimize(pp::Engine(k, p, opts).full_series());
}

}  // namespace

BENCHMARK(BM_ReferenceFull)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParallelFull)->ArgsProduct({{0, 1, 2, 3}, {1, 2, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
