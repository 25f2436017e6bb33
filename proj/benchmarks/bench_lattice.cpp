#include <benchmark/benchmark.h>

#include "fcslab/catalog.hpp"
#include "fcslab/ideals.hpp"
#include "fcslab/theorems.hpp"

using namespace fcslab;

namespace {

void BM_ValidateTernions(benchmark::State& state) {
    FiniteRing gf = ring_gf(4);
    for (auto _ : state) {
        FiniteRing ring = ring_ternions(4);  // includes the full axiom sweep
        benchmark::DoNotOptimize(ring.order());
    }
}
BENCHMARK(BM_ValidateTernions)->Unit(benchmark::kMillisecond);

void BM_AllRightIdeals(benchmark::State& state) {
    FiniteRing ring = ring_ternions(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto ideals = all_ideals(ring, Side::Right);
        benchmark::DoNotOptimize(ideals.size());
    }
}
BENCHMARK(BM_AllRightIdeals)->Arg(2)->Arg(3)->Arg(4);

void BM_JacobsonRadical(benchmark::State& state) {
    FiniteRing ring = ring_zn(16);
    for (auto _ : state) {
        RadicalInfo info = jacobson_radical(ring);
        benchmark::DoNotOptimize(info.nilpotency);
    }
}
BENCHMARK(BM_JacobsonRadical);

void BM_TheoremSuiteTernions(benchmark::State& state) {
    FiniteRing ring = ring_ternions(2);
    for (auto _ : state) {
        TheoremReport report = run_all(ring);
        benchmark::DoNotOptimize(report.checks.size());
    }
}
BENCHMARK(BM_TheoremSuiteTernions)->Unit(benchmark::kMillisecond);

}  // namespace
