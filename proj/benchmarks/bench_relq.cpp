#include <benchmark/benchmark.h>

#include "relq/learner.hpp"
#include "relq/oracle.hpp"

using namespace relq;

static void BM_ValueIteration(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    GridSpec spec(n, n, {0, 0}, {n - 1, n - 1});
    for (auto _ : state) {
        QTable q = value_iteration(spec, 0.8);
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(BM_ValueIteration)->Arg(10)->Arg(20);

static void BM_Training(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    GridSpec spec(n, n, {0, 0}, {n - 1, n - 1});
    AgentParams params{.seed = 1};
    for (auto _ : state) {
        Rng rng(1);
        LearningCurve curve = run_training(spec, params, 100, rng);
        benchmark::DoNotOptimize(curve);
    }
}
BENCHMARK(BM_Training)->Arg(10)->Arg(20);

static void BM_Episode(benchmark::State& state) {
    GridSpec spec(20, 20, {0, 0}, {19, 19});
    AgentParams params{};
    QTable table(spec);
    Rng rng(1);
    for (auto _ : state) {
        EpisodeResult r = run_episode(spec, table, params, rng);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Episode);

BENCHMARK_MAIN();
