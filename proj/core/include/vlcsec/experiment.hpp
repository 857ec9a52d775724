#pragma once

// Seeded Monte-Carlo sweeps over scenario parameters. Every (sweep value,
// instance) pair is an independent work unit whose random streams derive
// from (master seed, instance index) alone, so instance i sees the same
// room draw at every sweep value and results do not depend on the number
// of worker threads.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "vlcsec/baselines.hpp"
#include "vlcsec/scenario.hpp"
#include "vlcsec/tabu_solver.hpp"

namespace vlcsec {

enum class ExperimentId {
    Convergence,
    PowerSweep,
    UeCountSweep,
    EveFovSweep,
    UeFovSweep,
    LocalizationErrorSweep,
    LayoutDump,
};

std::string_view to_string(ExperimentId id);
std::optional<ExperimentId> parse_experiment(std::string_view name);

enum class LayoutSource { Random, Reference };

struct ExperimentSpec {
    ExperimentId id = ExperimentId::PowerSweep;
    ScenarioConfig base;           // base.rng_seed is the master seed
    std::vector<double> sweep;
    int num_instances = 500;
    std::vector<StrategyKind> solvers;
    std::optional<int> ts_max_iterations;
    std::optional<int> ts_repetition_threshold;
    NeighborhoodKind ts_neighborhood = NeighborhoodKind::SingleCoordinate;
    bool force_oracle = false;
    unsigned threads = 0;          // 0: hardware concurrency
    LayoutSource layout = LayoutSource::Random;
    std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
};

std::vector<double> default_sweep(ExperimentId id);

// Default sweep, solver list, and instance count for `id`.
ExperimentSpec default_spec(ExperimentId id);

// The swept scenario parameter set to `value`. Convergence sweeps the UE
// count; layout_dump ignores the value.
ScenarioConfig apply_sweep_value(const ScenarioConfig& base, ExperimentId id, double value);

// Throws InvalidParameterError on empty sweeps, empty solver lists, or
// non-positive instance counts.
void validate(const ExperimentSpec& spec);

struct ResultRow {
    ExperimentId experiment = ExperimentId::PowerSweep;
    double sweep_value = 0.0;
    StrategyKind solver = StrategyKind::TabuSearch;
    double mean = 0.0;
    double std_error = 0.0;
    int n = 0;
    std::uint64_t seed = 0;
    std::vector<double> objectives; // per instance, index order
};

struct ConvergenceRun {
    double sweep_value = 0.0;
    int instance = 0;
    std::vector<TraceRecord> trace;
    double ts_value = 0.0;
    std::size_t ts_evaluations = 0;
    std::size_t ts_evaluations_to_best = 0;
    double oracle_value = 0.0;
    std::uint64_t oracle_evaluations = 0;
};

struct ExperimentResult {
    ExperimentSpec spec;
    std::vector<StrategyKind> solvers; // after oracle auto-disable
    std::vector<ResultRow> rows;       // sweep-major, then solver order
    std::vector<ConvergenceRun> convergence;
    std::optional<Scenario> layout;
    int resampled_instances = 0;
    int strategy_repairs = 0;
    std::vector<std::string> notes;
};

// For each sweep value and instance: sample a scenario, build the channel
// table the solvers see (Eve's estimated position), run every solver, and
// score the result against Eve's true position.
ExperimentResult run_experiment(const ExperimentSpec& spec);

} // namespace vlcsec
