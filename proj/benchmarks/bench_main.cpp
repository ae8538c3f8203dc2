#include <benchmark/benchmark.h>

#include <cmath>
#include <limits>

#include "diraccmp/dirac1d.hpp"
#include "diraccmp/diracd.hpp"
#include "diraccmp/theorems.hpp"

namespace {

using namespace diraccmp;

void BM_QuadSmooth(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            quad_adaptive([](double x) { return std::exp(-x) * std::sin(x); }, 0.0,
                          std::numeric_limits<double>::infinity()));
    }
}
BENCHMARK(BM_QuadSmooth);

void BM_QuadOscillatoryLobes(benchmark::State& state) {
    std::vector<double> zeros{1.64};
    for (int k = 1; k <= 20; ++k) zeros.push_back(k * 3.14159265358979323846);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            quad_oscillatory([](double z) { return std::sin(z) / z; }, zeros));
    }
}
BENCHMARK(BM_QuadOscillatoryLobes);

void BM_OdeConstantSystem(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate_ode(
            [](double, const std::array<double, 2>& y) {
                return std::array<double, 2>{y[1], y[0]};
            },
            0.0, {1.0, 0.0}, 10.0, {}, false));
    }
}
BENCHMARK(BM_OdeConstantSystem);

void BM_Solve1DHarmonic(benchmark::State& state) {
    const auto V = PotentialSpec::harmonic(0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_ground_1d(V, SymmetryMode(+1), 1.2));
    }
}
BENCHMARK(BM_Solve1DHarmonic)->Unit(benchmark::kMillisecond);

void BM_SolveRadialYukawa(benchmark::State& state) {
    const auto V = PotentialSpec::yukawa(0.2, 0.1);
    const Channel ch(2, 0.5, -1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_ground_radial(V, SymmetryMode(+1), 1.0, ch));
    }
}
BENCHMARK(BM_SolveRadialYukawa)->Unit(benchmark::kMillisecond);

void BM_TransformG(benchmark::State& state) {
    const auto Va = PotentialSpec::harmonic(0.5);
    const auto Vb = PotentialSpec::sine_modulated_harmonic(0.5, 1.64);
    for (auto _ : state) {
        benchmark::DoNotOptimize(transform_g(Va, Vb, 8.0));
    }
}
BENCHMARK(BM_TransformG)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
