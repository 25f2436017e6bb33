#include <benchmark/benchmark.h>

#include "fcslab/catalog.hpp"
#include "fcslab/plane.hpp"

using namespace fcslab;

namespace {

void BM_AnalyzePlaneTernions(benchmark::State& state) {
    FiniteRing ring = ring_ternions(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        PlaneAnalysis analysis = analyze_plane(ring);
        benchmark::DoNotOptimize(analysis.outliers.size());
    }
    state.SetItemsProcessed(state.iterations() * ring.order() * ring.order());
}
BENCHMARK(BM_AnalyzePlaneTernions)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_AnalyzePlaneMatrixRing(benchmark::State& state) {
    FiniteRing ring = ring_m2_gf2();
    for (auto _ : state) {
        PlaneAnalysis analysis = analyze_plane(ring);
        benchmark::DoNotOptimize(analysis.fcs.size());
    }
}
BENCHMARK(BM_AnalyzePlaneMatrixRing)->Unit(benchmark::kMillisecond);

void BM_IsUnimodular(benchmark::State& state) {
    FiniteRing ring = ring_ternions(4);
    int a = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_unimodular(ring, {a, (a * 7 + 3) % ring.order()}));
        a = (a + 1) % ring.order();
    }
}
BENCHMARK(BM_IsUnimodular);

void BM_CyclicSubmodule(benchmark::State& state) {
    FiniteRing ring = ring_ternions(4);
    int a = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cyclic_submodule(ring, {a, (a * 5 + 1) % ring.order()}).free);
        a = (a + 1) % ring.order();
    }
}
BENCHMARK(BM_CyclicSubmodule);

}  // namespace
