#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include <benchmark/benchmark.h>

#include "curvarc/curvarc.hpp"

namespace {

using namespace curvarc;

// Smooth star-shaped blob, deterministic in n.
PlanarContour blob(std::size_t n) {
    std::vector<Vec2> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
        const double r = 1.0 + 0.3 * std::sin(5.0 * t) + 0.15 * std::cos(3.0 * t);
        pts[i] = {r * std::cos(t), r * std::sin(t)};
    }
    return PlanarContour(std::move(pts), true);
}

void BM_ArcLengthTable(benchmark::State& state) {
    const PlanarContour c = blob(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(arc_length_table(c));
}
BENCHMARK(BM_ArcLengthTable)->Arg(100)->Arg(1000)->Arg(10000);

void BM_DiscreteCurvature(benchmark::State& state) {
    const PlanarContour c = blob(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(discrete_curvature(c));
}
BENCHMARK(BM_DiscreteCurvature)->Arg(100)->Arg(1000)->Arg(10000);

void BM_MovingFrames(benchmark::State& state) {
    const PlanarContour c = blob(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(moving_frames(c));
}
BENCHMARK(BM_MovingFrames)->Arg(100)->Arg(1000)->Arg(10000);

void BM_ResampleUniformPolyline(benchmark::State& state) {
    const PlanarContour c = blob(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(resample_uniform(c, InterpolationMode::Polyline, 256));
}
BENCHMARK(BM_ResampleUniformPolyline)->Arg(100)->Arg(1000)->Arg(10000);

void BM_ResampleUniformSpline(benchmark::State& state) {
    const PlanarContour c = blob(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(resample_uniform(c, InterpolationMode::CubicSpline, 256));
}
BENCHMARK(BM_ResampleUniformSpline)->Arg(100)->Arg(1000);

void BM_SplineInterpolantBuild(benchmark::State& state) {
    const PlanarContour c = blob(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(CurveInterpolant(c, InterpolationMode::CubicSpline));
}
BENCHMARK(BM_SplineInterpolantBuild)->Arg(100)->Arg(1000);

void BM_BuildMap(benchmark::State& state) {
    const CurvatureProfile p = discrete_curvature(blob(static_cast<std::size_t>(state.range(0))));
    const WeightSpec spec{1.0, 1.0};
    for (auto _ : state) benchmark::DoNotOptimize(build_map(p, spec));
}
BENCHMARK(BM_BuildMap)->Arg(100)->Arg(1000)->Arg(10000);

void BM_MapInvert(benchmark::State& state) {
    const CurvatureProfile p = discrete_curvature(blob(static_cast<std::size_t>(state.range(0))));
    const ReparamMap map = build_map(p, {1.0, 1.0});
    double u = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(map.invert(u));
        u += 0.001;
        if (u > 1.0) u -= 1.0;
    }
}
BENCHMARK(BM_MapInvert)->Arg(100)->Arg(1000)->Arg(10000);

void BM_PlaceLandmarks(benchmark::State& state) {
    const PlanarContour c = blob(static_cast<std::size_t>(state.range(0)));
    const WeightSpec spec{1.0, 7.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            place_landmarks(c, InterpolationMode::Polyline, spec, 64, 0.0, true));
}
BENCHMARK(BM_PlaceLandmarks)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
