#include <benchmark/benchmark.h>

#include <random>

#include "pcab/biplot.hpp"
#include "pcab/eigen.hpp"
#include "pcab/pca.hpp"
#include "pcab/svd.hpp"

namespace {

pcab::Matrix random_centered(std::size_t n, std::size_t m, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    pcab::Matrix y(n, m);
    for (std::size_t j = 0; j < m; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            y(i, j) = dist(rng);
            mean += y(i, j);
        }
        mean /= static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) y(i, j) -= mean;
    }
    return y;
}

pcab::Matrix random_symmetric(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    pcab::Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = dist(rng);
    return m;
}

void BM_Jacobi(benchmark::State& state) {
    const auto m = random_symmetric(static_cast<std::size_t>(state.range(0)), 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(pcab::eigen_symmetric(m));
}
BENCHMARK(BM_Jacobi)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Svd(benchmark::State& state) {
    const auto y = random_centered(static_cast<std::size_t>(state.range(0)),
                                   static_cast<std::size_t>(state.range(1)), 12);
    for (auto _ : state)
        benchmark::DoNotOptimize(pcab::svd(y));
}
BENCHMARK(BM_Svd)->Args({16, 4})->Args({64, 8})->Args({256, 16});

void BM_FullPca(benchmark::State& state) {
    const pcab::DataMatrix y(random_centered(
        static_cast<std::size_t>(state.range(0)),
        static_cast<std::size_t>(state.range(1)), 13));
    const auto& profile = pcab::find_profile("svd-reference");
    for (auto _ : state)
        benchmark::DoNotOptimize(pcab::analyze(y, profile));
}
BENCHMARK(BM_FullPca)->Args({16, 4})->Args({64, 8})->Args({256, 16});

void BM_Biplot(benchmark::State& state) {
    const auto y = random_centered(64, 8, 14);
    const auto s = pcab::svd(y);
    for (auto _ : state)
        benchmark::DoNotOptimize(pcab::biplot_coordinates(s, 0.5, 2));
}
BENCHMARK(BM_Biplot);

} // namespace

BENCHMARK_MAIN();
