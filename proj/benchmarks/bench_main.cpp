#include "linperiod/local_factors.hpp"
#include "linperiod/partial_l.hpp"
#include "linperiod/sampling.hpp"
#include "linperiod/schur.hpp"

#include <benchmark/benchmark.h>

using namespace linperiod;

static void BM_WeightSumIntegral(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto order = static_cast<std::size_t>(state.range(1));
    Rng rng(default_seed);
    const auto data = sample_satake(n, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(weight_sum_integral(data, order, 1));
}
BENCHMARK(BM_WeightSumIntegral)->Args({4, 8})->Args({6, 8})->Args({6, 12})->Unit(benchmark::kMillisecond);

static void BM_ProductSide(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(default_seed);
    const auto data = sample_satake(n, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(product_side(data, 8, ExteriorConvention::doubled));
}
BENCHMARK(BM_ProductSide)->DenseRange(2, 6, 2)->Unit(benchmark::kMicrosecond);

// Schur evaluation: Jacobi-Trudi vs alternant ratio
static void BM_SchurJacobiTrudi(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(default_seed);
    const auto z = sample_distinct_rationals(n, rng);
    const auto weights = enumerate_weights(n, 6);
    for (auto _ : state)
        for (const auto& w : weights)
            benchmark::DoNotOptimize(schur_jacobi_trudi(w, z));
}
BENCHMARK(BM_SchurJacobiTrudi)->DenseRange(2, 6, 2)->Unit(benchmark::kMicrosecond);

static void BM_SchurAlternant(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(default_seed);
    const auto z = sample_distinct_rationals(n, rng);
    const auto weights = enumerate_weights(n, 6);
    for (auto _ : state)
        for (const auto& w : weights)
            benchmark::DoNotOptimize(schur_alternant(w, z));
}
BENCHMARK(BM_SchurAlternant)->DenseRange(2, 6, 2)->Unit(benchmark::kMicrosecond);

static void BM_AssemblePartialL(benchmark::State& state)
{
    const auto bound = static_cast<std::uint64_t>(state.range(0));
    const auto threads = static_cast<unsigned>(state.range(1));
    Rng rng(default_seed);
    SatakeTable table;
    table.n = 2;
    table.label = "bench";
    for (auto p : primes_up_to(100))
        table.entries.emplace(p, sample_satake(2, rng));
    for (auto _ : state)
        benchmark::DoNotOptimize(assemble(table, bound, FactorSelection::full, threads));
}
BENCHMARK(BM_AssemblePartialL)->Args({10000, 1})->Args({10000, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
