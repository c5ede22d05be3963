#include <benchmark/benchmark.h>

#include "holex/extension_tests.hpp"
#include "holex/gallery.hpp"
#include "holex/semiquadrics.hpp"
#include "holex/slicing.hpp"

using namespace holex;

namespace {

void BM_SliceCoefficient(benchmark::State& state) {
    const auto km = make_gallery_entry("km:p=1:q=-1");
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(slice_coefficient(km.fn, 2, cplx(0.3, 0.4), order));
    }
}
BENCHMARK(BM_SliceCoefficient)->Arg(64)->Arg(256)->Arg(1024);

void BM_LineExtensionTest(benchmark::State& state) {
    const auto e11 = make_gallery_entry("example11:k=3");
    const ComplexLine L = ComplexLine::through_point({0.0, cplx(0.0, 0.5)}, {0.7, 1.0});
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(line_extension_test(e11.fn, L, order, 1e-8));
    }
}
BENCHMARK(BM_LineExtensionTest)->Arg(64)->Arg(256);

void BM_FamilySweep(benchmark::State& state) {
    const auto absw2 = make_gallery_entry("absw2");
    const int density = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(family_extension_test(
            absw2.fn, LineFamilySpec::through({0.0, 0.0}), density, 128, 1e-8));
    }
}
BENCHMARK(BM_FamilySweep)->Arg(16)->Arg(64);

void BM_BallVerdict(benchmark::State& state) {
    const auto f = make_gallery_entry("z2zw");
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            ball_extension_verdict(f.fn, -4, 8, {0.5, 0.7, 0.9}, order, 1e-8, 1e-8));
    }
}
BENCHMARK(BM_BallVerdict)->Arg(64)->Arg(256);

void BM_SeparationScan(benchmark::State& state) {
    const int grid = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(prop71_separation_check(0.5, 0.19, grid));
    }
}
BENCHMARK(BM_SeparationScan)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
