/**
 * @file bench.cpp
 * @brief Microbenchmarks for the hot paths: empirical depth sweep,
 *        polygonal depth, central regions, floating bodies, and the
 *        affine-surface-area quadratures.
 */

#include <benchmark/benchmark.h>

#include "hsdepth/approx.hpp"
#include "hsdepth/depth.hpp"
#include "hsdepth/regions.hpp"

using namespace hsdepth;

namespace {

std::vector<Vec2> gaussian_cloud(std::size_t n, std::uint64_t seed) {
    return Measure::standard_gaussian(2).sample2d(n, seed);
}

void BM_EmpiricalDepthSweep(benchmark::State& state) {
    const std::vector<Vec2> pts = gaussian_cloud(state.range(0), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(hd_empirical_2d({0.1, -0.2}, pts));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EmpiricalDepthSweep)->Range(64, 16384)->Complexity();

void BM_PolygonalDepth(benchmark::State& state) {
    const Measure m =
        Measure::uniform_polygon(Polygon::regular_ngon(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(hd_polygonal({0.3, 0.1}, m));
}
BENCHMARK(BM_PolygonalDepth)->Arg(8)->Arg(64)->Arg(512);

void BM_CentralRegion(benchmark::State& state) {
    const Measure m = Measure::standard_gaussian(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(central_region(m, 0.2, state.range(0)));
}
BENCHMARK(BM_CentralRegion)->Arg(128)->Arg(512);

void BM_FloatingBodyPolygon(benchmark::State& state) {
    const Measure m =
        Measure::uniform_polygon(Polygon::regular_ngon(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(convex_floating_body(m, 0.05, 256));
}
BENCHMARK(BM_FloatingBodyPolygon)->Arg(64)->Arg(512)->Arg(2048);

void BM_AffineSurfaceArea(benchmark::State& state) {
    const SmoothBody2D e = SmoothBody2D::ellipse(2.0, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(affine_surface_area(e));
}
BENCHMARK(BM_AffineSurfaceArea);

void BM_ConvexHullSample(benchmark::State& state) {
    const std::vector<Vec2> pts = gaussian_cloud(state.range(0), 3);
    for (auto _ : state) {
        std::vector<Vec2> copy = pts;
        benchmark::DoNotOptimize(convex_hull(std::move(copy)));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConvexHullSample)->Range(256, 65536)->Complexity();

void BM_GreedyFloatingApprox(benchmark::State& state) {
    const Polygon disk = Polygon::regular_ngon(256);
    for (auto _ : state)
        benchmark::DoNotOptimize(floating_body_algorithm(disk, 1e-2));
}
BENCHMARK(BM_GreedyFloatingApprox);

}  // namespace

BENCHMARK_MAIN();
