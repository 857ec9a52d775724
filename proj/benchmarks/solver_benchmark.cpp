#include <benchmark/benchmark.h>

#include "vlcsec/baselines.hpp"
#include "vlcsec/scenario.hpp"
#include "vlcsec/tabu_solver.hpp"

namespace {

vlcsec::Scenario random_room(int num_ues, std::uint64_t seed) {
    vlcsec::ScenarioConfig config;
    config.num_ues = num_ues;
    vlcsec::Rng rng(seed);
    return vlcsec::sample_feasible_instance(config, rng).scenario;
}

void BM_BuildChannelTable(benchmark::State& state) {
    const auto scenario = random_room(static_cast<int>(state.range(0)), 11);
    for (auto _ : state) benchmark::DoNotOptimize(vlcsec::build_channel_table(scenario));
}
BENCHMARK(BM_BuildChannelTable)->Arg(5)->Arg(8);

void BM_SumSecrecyRate(benchmark::State& state) {
    const auto scenario = random_room(static_cast<int>(state.range(0)), 12);
    const auto table = vlcsec::build_channel_table(scenario);
    const auto a = vlcsec::channel_gain_strategy(table, vlcsec::ConflictPolicy::Repair);
    for (auto _ : state) benchmark::DoNotOptimize(vlcsec::sum_secrecy_rate(table, a, scenario.noise));
}
BENCHMARK(BM_SumSecrecyRate)->Arg(5)->Arg(8);

void BM_TabuSearch(benchmark::State& state) {
    const auto m = static_cast<int>(state.range(0));
    const auto scenario = random_room(m, 13);
    const auto table = vlcsec::build_channel_table(scenario);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto r = vlcsec::run_tabu_search(table, scenario.noise, vlcsec::TsConfig::for_ues(m, ++seed));
        benchmark::DoNotOptimize(r.best_value);
    }
}
BENCHMARK(BM_TabuSearch)->Arg(3)->Arg(5)->Arg(8);

void BM_GlobalSearch(benchmark::State& state) {
    const auto scenario = random_room(static_cast<int>(state.range(0)), 14);
    const auto table = vlcsec::build_channel_table(scenario);
    state.counters["evaluations"] = static_cast<double>(vlcsec::global_search(table, scenario.noise).evaluations);
    for (auto _ : state) benchmark::DoNotOptimize(vlcsec::global_search(table, scenario.noise).value);
}
BENCHMARK(BM_GlobalSearch)->Arg(3)->Arg(5);

void BM_FixedStrategies(benchmark::State& state) {
    const auto scenario = random_room(8, 15);
    const auto table = vlcsec::build_channel_table(scenario);
    for (auto _ : state) {
        benchmark::DoNotOptimize(vlcsec::channel_gain_strategy(table, vlcsec::ConflictPolicy::Repair));
        benchmark::DoNotOptimize(vlcsec::eve_aware_strategy(table, vlcsec::ConflictPolicy::Repair));
    }
}
BENCHMARK(BM_FixedStrategies);

} // namespace

BENCHMARK_MAIN();
