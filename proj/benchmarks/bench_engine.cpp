#include <benchmark/benchmark.h>

#include <geoiter/betti.hpp>
#include <geoiter/identity.hpp>
#include <geoiter/index_engine.hpp>
#include <geoiter/quasi_period.hpp>

using namespace geoiter;

namespace {

GeodesicModel golden_rotation() {
    GeodesicModel m;
    m.dim_M = 2;
    m.initial_index = 1;
    m.nf.rotations = {AngleRatio::quadratic(-1, 1, 2, 5)};
    m.nf.half_dim = 1;
    return m;
}

GeodesicModel mixed_surface() {
    GeodesicModel m;
    m.dim_M = 4;
    m.initial_index = 2;
    m.nf.rotations = {AngleRatio::quadratic(-1, 1, 2, 5), AngleRatio::rational(2, 7)};
    m.nf.p_plus = 1;
    m.nf.half_dim = 3;
    return m;
}

} // namespace

static void BM_IndexIterate(benchmark::State& state) {
    GeodesicModel model = mixed_surface();
    Int m = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(index_iterate(model, m));
}
BENCHMARK(BM_IndexIterate)->Arg(8)->Arg(1 << 10)->Arg(1 << 20);

static void BM_FloorScaledQuadratic(benchmark::State& state) {
    AngleRatio x = AngleRatio::quadratic(-1, 1, 2, 5);
    Int m = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(floor_scaled(m, x));
}
BENCHMARK(BM_FloorScaledQuadratic)->Arg(8)->Arg(1 << 10)->Arg(1 << 20);

static void BM_FindQuasiPeriod(benchmark::State& state) {
    GeodesicModel model = golden_rotation();
    QuasiPeriodConfig cfg;
    cfg.strong_period = state.range(0) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(find_quasi_period(model, cfg).T);
}
BENCHMARK(BM_FindQuasiPeriod)->Arg(0)->Arg(1);

static void BM_ContradictionScan(benchmark::State& state) {
    ManifoldClass mc = ManifoldClass::make(3, 1);
    long long max_sum = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(contradiction_scan(mc, max_sum, 6).scanned);
}
BENCHMARK(BM_ContradictionScan)->Arg(64)->Arg(256);

static void BM_AlternatingSums(benchmark::State& state) {
    ManifoldClass mc = ManifoldClass::make(4, 2);
    long long kmax = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(alternating_sum_check(mc, kmax).rows.size());
}
BENCHMARK(BM_AlternatingSums)->Arg(128)->Arg(1024);

BENCHMARK_MAIN();
