#include <benchmark/benchmark.h>

#include "thintree/canonical.hpp"
#include "thintree/cuts.hpp"
#include "thintree/generators.hpp"
#include "thintree/make_lam.hpp"
#include "thintree/pipeline.hpp"
#include "thintree/polygon.hpp"

using namespace thintree;

static void BM_EnumerateCycle(benchmark::State& state) {
    auto g = gen_cycle(int(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_near_min_cuts(g, Rational(1, 40)));
    }
}
BENCHMARK(BM_EnumerateCycle)->Arg(8)->Arg(12)->Arg(16);

static void BM_EnumerateFig2(benchmark::State& state) {
    auto g = gen_fig2();
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_near_min_cuts(g, Rational(1, 5)));
    }
}
BENCHMARK(BM_EnumerateFig2);

static void BM_PolygonAndTable(benchmark::State& state) {
    auto g = gen_cycle(int(state.range(0)));
    auto cuts = enumerate_near_min_cuts(g, Rational(1, 40));
    auto comps = components(cuts, g.num_vertices());
    const CrossComponent* big = nullptr;
    for (const auto& c : comps)
        if (c.cuts.size() >= 2) big = &c;
    for (auto _ : state) {
        auto poly = build_polygon(*big);
        benchmark::DoNotOptimize(build_canonical_table(g, poly, 2, Rational(1, 40)));
    }
}
BENCHMARK(BM_PolygonAndTable)->Arg(8)->Arg(12);

static void BM_MakeLam(benchmark::State& state) {
    auto g = gen_cycle(int(state.range(0)));
    auto cuts = enumerate_near_min_cuts(g, Rational(1, 40));
    auto comps = components(cuts, g.num_vertices());
    const CrossComponent* big = nullptr;
    for (const auto& c : comps)
        if (c.cuts.size() >= 2) big = &c;
    auto poly = build_polygon(*big);
    auto table = build_canonical_table(g, poly, 2, Rational(1, 40));
    for (auto _ : state) {
        benchmark::DoNotOptimize(make_lam(table));
    }
}
BENCHMARK(BM_MakeLam)->Arg(8)->Arg(12);

static void BM_PipelineCycle(benchmark::State& state) {
    auto g = gen_cycle(int(state.range(0)));
    RunConfig config;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_pipeline(g, config));
    }
}
BENCHMARK(BM_PipelineCycle)->Arg(6)->Arg(10);

static void BM_PipelineFig2(benchmark::State& state) {
    auto g = gen_fig2();
    RunConfig config;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_pipeline(g, config));
    }
}
BENCHMARK(BM_PipelineFig2);

static void BM_PipelineRandom(benchmark::State& state) {
    auto g = gen_random_kec(int(state.range(0)), 2, 7);
    RunConfig config;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_pipeline(g, config));
    }
}
BENCHMARK(BM_PipelineRandom)->Arg(10)->Arg(12);

BENCHMARK_MAIN();
