#include <benchmark/benchmark.h>

#include "compoq/compositions.hpp"
#include "compoq/dirichlet.hpp"
#include "compoq/partitions.hpp"
#include "compoq/partsets.hpp"
#include "compoq/power_series.hpp"
#include "compoq/qgen.hpp"

using namespace compoq;

static void BM_RecipTheta(benchmark::State& state)
{
    const auto order = static_cast<std::size_t>(state.range(0));
    const auto psi = theta_sum({1, 3, 1, 1}, order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(series_recip(psi));
    }
}
BENCHMARK(BM_RecipTheta)->Arg(200)->Arg(1000)->Arg(4000);

// Dense reciprocal for comparison: the lacunary input is what makes recip cheap.
static void BM_RecipDense(benchmark::State& state)
{
    const auto order = static_cast<std::size_t>(state.range(0));
    const auto p = named_gf(NamedSeries::partition, order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(series_recip(p));
    }
}
BENCHMARK(BM_RecipDense)->Arg(200)->Arg(1000);

static void BM_ProductExpand(benchmark::State& state)
{
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(named_gf(NamedSeries::r, order));
    }
}
BENCHMARK(BM_ProductExpand)->Arg(200)->Arg(1000)->Arg(4000);

static void BM_WeightedSumBrute(benchmark::State& state)
{
    const std::int64_t n = state.range(0);
    const PartSet parts = polygonal_set(3, n);
    const auto rule = stat_weight(StatKind::p3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(weighted_sum_bruteforce(parts, rule, n));
    }
}
BENCHMARK(BM_WeightedSumBrute)->DenseRange(15, 25, 5);

static void BM_WeightedSumDp(benchmark::State& state)
{
    const std::int64_t n = state.range(0);
    const PartSet parts = polygonal_set(3, n);
    const auto rule = stat_weight(StatKind::p3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(weighted_sums(parts, rule, n));
    }
}
BENCHMARK(BM_WeightedSumDp)->DenseRange(15, 25, 5)->Arg(1000);

static void BM_PartitionCountDp(benchmark::State& state)
{
    const std::int64_t n = state.range(0);
    const PartSet parts = residue_set_sk(7, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(counts_ps(parts, n));
    }
}
BENCHMARK(BM_PartitionCountDp)->Arg(1000)->Arg(2000);

static void BM_MobiusMemoized(benchmark::State& state)
{
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        SignedFactorizationCounter counter;
        for (std::int64_t m = 1; m <= n; ++m) {
            benchmark::DoNotOptimize(counter(m));
        }
    }
}
BENCHMARK(BM_MobiusMemoized)->Arg(5000);

static void BM_MobiusDirichlet(benchmark::State& state)
{
    const std::int64_t n = state.range(0);
    const PartSet parts = naturals_from_two_set(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(comp_zeta_coeffs(parts, -1, n));
    }
}
BENCHMARK(BM_MobiusDirichlet)->Arg(5000)->Arg(100000);
BENCHMARK_MAIN();
