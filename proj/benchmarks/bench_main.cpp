#include <benchmark/benchmark.h>

#include "socineff/axioms.hpp"
#include "socineff/frontier.hpp"
#include "socineff/inefficiency.hpp"
#include "socineff/lp.hpp"
#include "socineff/matching.hpp"

namespace {

using namespace socineff;

void BM_SimplexExact(benchmark::State& state) {
    const std::size_t m = static_cast<std::size_t>(state.range(0));
    // max sum x_i subject to a dense random-ish system, rational pivots
    std::vector<std::vector<Rat>> A(m, std::vector<Rat>(m));
    std::vector<Rat> b(m), c(m, Rat(1));
    for (std::size_t i = 0; i < m; ++i) {
        b[i] = Rat(static_cast<long>(m + i));
        for (std::size_t j = 0; j < m; ++j)
            A[i][j] = Rat(static_cast<long>(1 + (i * 7 + j * 3) % 5));
    }
    for (auto _ : state) {
        auto r = lp_maximize(A, b, c);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_SimplexExact)->Arg(4)->Arg(8)->Arg(12);

void BM_FrontierClassification(benchmark::State& state) {
    const std::size_t m = static_cast<std::size_t>(state.range(0));
    auto c = random_context(3, m, 12345);
    for (auto _ : state) {
        auto f = frontier_summary(c);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_FrontierClassification)->Arg(4)->Arg(8)->Arg(16);

void BM_InefficiencyExact(benchmark::State& state) {
    auto c = random_context(4, 8, 777);
    auto f = frontier_summary(c);
    auto x = random_lottery(8, 778);
    for (auto _ : state) {
        auto r = ihat(c, f, x);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_InefficiencyExact);

void BM_RsdExact(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    auto p = random_allocation(n, 99);
    for (auto _ : state) {
        auto lot = rsd_exact(p);
        benchmark::DoNotOptimize(lot);
    }
}
BENCHMARK(BM_RsdExact)->Arg(4)->Arg(6);

void BM_RsdSampleFloat(benchmark::State& state) {
    auto p = to_double(random_allocation(8, 4242));
    for (auto _ : state) {
        auto lot = rsd_sample(p, 1000, 7);
        benchmark::DoNotOptimize(lot);
    }
}
BENCHMARK(BM_RsdSampleFloat);

void BM_FindMinParetoMatch(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    auto p = random_allocation(n, 31);
    for (auto _ : state) {
        auto o = find_min_pareto_match(p, 0);
        benchmark::DoNotOptimize(o);
    }
}
BENCHMARK(BM_FindMinParetoMatch)->Arg(5)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
