#include <benchmark/benchmark.h>

#include <cmath>
#include <cstdint>

#include "tropfrieze/example.hpp"
#include "tropfrieze/frieze.hpp"
#include "tropfrieze/index.hpp"
#include "tropfrieze/theta.hpp"

using namespace tropfrieze;

static void BM_Validate(benchmark::State& state) {
    const auto spec = builtin_ot_a4();
    for (auto _ : state) benchmark::DoNotOptimize(validate(spec));
}
BENCHMARK(BM_Validate);

static void BM_IndexTable(benchmark::State& state) {
    const auto spec = builtin_ot_a4();
    for (auto _ : state) benchmark::DoNotOptimize(index_table(spec));
}
BENCHMARK(BM_IndexTable);

static void BM_Theta(benchmark::State& state) {
    const auto spec = builtin_ot_a4();
    const auto table = index_table(spec);
    for (auto _ : state) benchmark::DoNotOptimize(theta_from_spec(spec, table));
}
BENCHMARK(BM_Theta);

static void BM_Additivity(benchmark::State& state) {
    const auto spec = builtin_ot_a4();
    const auto table = index_table(spec);
    const auto theta = theta_from_spec(spec, table);
    for (auto _ : state) benchmark::DoNotOptimize(verify_additivity(spec, table, theta));
}
BENCHMARK(BM_Additivity);

static void BM_Enumerate(benchmark::State& state) {
    const auto spec = builtin_ot_a4();
    const auto table = index_table(spec);
    const auto cone = cone_matrix(spec, theta_from_spec(spec, table));
    const Coeff bound = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_admissible(cone, bound));
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(std::pow(2.0 * bound + 1, 4)));
}
BENCHMARK(BM_Enumerate)->Arg(3)->Arg(5)->Arg(10);

static void BM_CheckFrieze(benchmark::State& state) {
    const auto spec = builtin_ot_a4();
    const auto table = index_table(spec);
    const auto f = frieze_from_phi(spec, table, builtin_fixtures().sample_phi);
    for (auto _ : state) benchmark::DoNotOptimize(check_frieze(spec, f));
}
BENCHMARK(BM_CheckFrieze);

static void BM_Propagate(benchmark::State& state) {
    const auto spec = builtin_ot_a4();
    for (auto _ : state)
        benchmark::DoNotOptimize(propagate_window(spec, {-17, -8, 2, 19}, "P(1)"));
}
BENCHMARK(BM_Propagate);

BENCHMARK_MAIN();
