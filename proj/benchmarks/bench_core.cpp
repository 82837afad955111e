#include <homoglab/canonical.hpp>
#include <homoglab/homogeneity.hpp>
#include <homoglab/presentation.hpp>
#include <homoglab/structure.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace homoglab;

namespace
{
    auto random_graph(int n, double p, unsigned seed) -> Graph
    {
        std::mt19937 rng(seed);
        std::bernoulli_distribution coin(p);
        return Graph::from_predicate(n, [&] (int, int) { return coin(rng); });
    }
}

static void independence_random(benchmark::State & state)
{
    auto g = random_graph(int(state.range(0)), 0.3, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(independence_number(g).size);
}
BENCHMARK(independence_random)->Arg(20)->Arg(40)->Arg(80);

static void canonical_random(benchmark::State & state)
{
    auto g = random_graph(int(state.range(0)), 0.5, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(canonical_random)->Arg(6)->Arg(8)->Arg(10);

static void canonical_empty(benchmark::State & state)
{
    auto g = named::empty(int(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(canonical_empty)->Arg(10);

static void decide_hh_empty(benchmark::State & state)
{
    auto g = named::empty(int(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(decide_xy(g, LocalKind::H, MorphismKind::H).verdict);
}
BENCHMARK(decide_hh_empty)->Arg(5)->Arg(6)->Arg(7);

static void decide_hh_conditions_cliques(benchmark::State & state)
{
    auto g = named::disjoint_union(named::complete(3), named::complete(3));
    for (auto _ : state)
        benchmark::DoNotOptimize(decide_hh_conditions(g).verdict);
}
BENCHMARK(decide_hh_conditions_cliques);

static void enumerate_seven(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_graphs(7).size());
}
BENCHMARK(enumerate_seven)->Unit(benchmark::kMillisecond);

static void classify_rado(benchmark::State & state)
{
    auto p = families::rado_bit();
    for (auto _ : state)
        benchmark::DoNotOptimize(classify_mb(p, Natural(state.range(0))).verdict);
}
BENCHMARK(classify_rado)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
