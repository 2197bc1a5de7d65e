#include "wassoc/corpus.hpp"
#include "wassoc/finalg.hpp"
#include "wassoc/matrix.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace wassoc;

namespace {

Matrix dense_matrix(std::size_t rows, std::size_t cols)
{
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> d(-3, 3);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = d(rng);
    return m;
}

void BM_rref_parallel(benchmark::State& state)
{
    const auto m = dense_matrix(static_cast<std::size_t>(state.range(0)), 120);
    for (auto _ : state)
        benchmark::DoNotOptimize(rref(m).rank);
}

void BM_rref_serial(benchmark::State& state)
{
    const auto m = dense_matrix(static_cast<std::size_t>(state.range(0)), 120);
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::rref_serial(m).rank);
}

std::function<Vec(std::span<const int>)> cube_product(const FinAlg& alg)
{
    return [&alg](std::span<const int> idx) {
        return alg.mul(alg.mul(alg.basis(idx[0]), alg.basis(idx[1])),
                       alg.mul(alg.basis(idx[2]), alg.basis(idx[3])));
    };
}

void BM_tabulate_parallel(benchmark::State& state)
{
    std::mt19937 rng(2);
    const FinAlg alg = corpus::random_algebra(rng, static_cast<int>(state.range(0)));
    const auto f = cube_product(alg);
    for (auto _ : state)
        benchmark::DoNotOptimize(MultiMap::tabulate(4, alg.dim(), f).tuples());
}

void BM_tabulate_serial(benchmark::State& state)
{
    std::mt19937 rng(2);
    const FinAlg alg = corpus::random_algebra(rng, static_cast<int>(state.range(0)));
    const auto f = cube_product(alg);
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::tabulate_serial(4, alg.dim(), f).tuples());
}

}  // namespace

BENCHMARK(BM_rref_parallel)->Arg(60)->Arg(240)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref_serial)->Arg(60)->Arg(240)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_tabulate_parallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_tabulate_serial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
