#include "vlcsec/experiment.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <utility>

#include "vlcsec/error.hpp"

namespace vlcsec {

namespace {

constexpr std::array<std::pair<ExperimentId, std::string_view>, 7> kExperimentNames{{
    {ExperimentId::Convergence, "convergence"},
    {ExperimentId::PowerSweep, "power_sweep"},
    {ExperimentId::UeCountSweep, "ue_count_sweep"},
    {ExperimentId::EveFovSweep, "eve_fov_sweep"},
    {ExperimentId::UeFovSweep, "ue_fov_sweep"},
    {ExperimentId::LocalizationErrorSweep, "localization_error_sweep"},
    {ExperimentId::LayoutDump, "layout_dump"},
}};

// Stream keys under (master, instance).
constexpr std::uint64_t kRandomStrategyStream = 1;
constexpr std::uint64_t kTabuStream = 2;

// Above this many UEs on a grid of at least this many LEDs the oracle is
// dropped unless forced.
constexpr int kOracleMaxUes = 4;
constexpr int kOracleGridThreshold = 25;

std::vector<double> arange(double from, double to, double step) {
    std::vector<double> v;
    const int n = static_cast<int>(std::floor((to - from) / step + 1e-9)) + 1;
    for (int i = 0; i < n; ++i) v.push_back(from + i * step);
    return v;
}

struct UnitOutcome {
    std::vector<double> objectives;
    int resamples = 0;
    int repairs = 0;
    std::optional<ConvergenceRun> convergence;
};

template <class Strategy>
Assignment with_repair_count(Strategy strategy, int& repairs) {
    try {
        return strategy(ConflictPolicy::Throw);
    } catch (const InfeasibleError&) {
        ++repairs;
        return strategy(ConflictPolicy::Repair);
    }
}

UnitOutcome run_unit(const ExperimentSpec& spec, const std::vector<StrategyKind>& solvers, double value,
                     int instance) {
    const ScenarioConfig config = apply_sweep_value(spec.base, spec.id, value);
    const std::uint64_t master = spec.base.rng_seed;
    const auto idx = static_cast<std::uint64_t>(instance);

    UnitOutcome out;
    Scenario scenario;
    if (spec.layout == LayoutSource::Reference) {
        scenario = reference_layout(config);
    } else {
        Rng rng(derive_seed(master, {idx}));
        auto sampled = sample_feasible_instance(config, rng);
        scenario = std::move(sampled.scenario);
        out.resamples = sampled.resamples;
    }
    const ChannelTable algo = build_channel_table(scenario, EveView::Estimated);
    const ChannelTable truth = build_channel_table(scenario, EveView::True);
    const NoiseModel noise = scenario.noise;

    std::optional<TsResult> ts;
    std::optional<GlobalSearchResult> oracle;
    for (StrategyKind kind : solvers) {
        Assignment chosen;
        switch (kind) {
        case StrategyKind::Random: {
            Rng rng(derive_seed(master, {idx, kRandomStrategyStream}));
            chosen = with_repair_count([&](ConflictPolicy p) { return random_strategy(algo, rng, p); },
                                       out.repairs);
            break;
        }
        case StrategyKind::ChannelGain:
            chosen = with_repair_count([&](ConflictPolicy p) { return channel_gain_strategy(algo, p); },
                                       out.repairs);
            break;
        case StrategyKind::EveAwareChannelGain:
            chosen = with_repair_count([&](ConflictPolicy p) { return eve_aware_strategy(algo, p); },
                                       out.repairs);
            break;
        case StrategyKind::TabuSearch: {
            TsConfig cfg = TsConfig::for_ues(algo.num_ues(), derive_seed(master, {idx, kTabuStream}));
            if (spec.ts_max_iterations) cfg.max_iterations = *spec.ts_max_iterations;
            if (spec.ts_repetition_threshold) cfg.repetition_threshold = *spec.ts_repetition_threshold;
            cfg.neighborhood = spec.ts_neighborhood;
            ts = run_tabu_search(algo, noise, cfg);
            chosen = ts->best;
            break;
        }
        case StrategyKind::GlobalSearch:
            oracle = global_search(algo, noise, spec.enumeration_budget);
            chosen = oracle->best;
            break;
        }
        out.objectives.push_back(sum_secrecy_rate(truth, chosen, noise));
    }

    if (spec.id == ExperimentId::Convergence && ts && oracle) {
        ConvergenceRun run;
        run.sweep_value = value;
        run.instance = instance;
        run.trace = ts->trace;
        run.ts_value = ts->best_value;
        run.ts_evaluations = ts->evaluations;
        run.ts_evaluations_to_best = ts->evaluations_to_best;
        run.oracle_value = oracle->value;
        run.oracle_evaluations = oracle->evaluations;
        out.convergence = std::move(run);
    }
    return out;
}

int max_ues(const ExperimentSpec& spec) {
    int m = spec.base.num_ues;
    if (spec.id == ExperimentId::UeCountSweep || spec.id == ExperimentId::Convergence) {
        m = 0;
        for (double v : spec.sweep) m = std::max(m, static_cast<int>(std::lround(v)));
    }
    if (spec.layout == LayoutSource::Reference) m = 5;
    return m;
}

} // namespace

std::string_view to_string(ExperimentId id) {
    for (const auto& [k, name] : kExperimentNames) {
        if (k == id) return name;
    }
    return "unknown";
}

std::optional<ExperimentId> parse_experiment(std::string_view name) {
    for (const auto& [k, n] : kExperimentNames) {
        if (n == name) return k;
    }
    return std::nullopt;
}

std::vector<double> default_sweep(ExperimentId id) {
    switch (id) {
    case ExperimentId::PowerSweep: return arange(10.0, 30.0, 2.0);
    case ExperimentId::UeCountSweep: return arange(1.0, 8.0, 1.0);
    case ExperimentId::EveFovSweep:
    case ExperimentId::UeFovSweep: return arange(30.0, 90.0, 10.0);
    case ExperimentId::LocalizationErrorSweep: return arange(0.0, 3.0, 0.5);
    case ExperimentId::Convergence: return {5.0};
    case ExperimentId::LayoutDump: return {0.0};
    }
    return {};
}

ExperimentSpec default_spec(ExperimentId id) {
    ExperimentSpec spec;
    spec.id = id;
    spec.sweep = default_sweep(id);
    switch (id) {
    case ExperimentId::Convergence:
        spec.num_instances = 50;
        spec.solvers = {StrategyKind::TabuSearch, StrategyKind::GlobalSearch};
        break;
    case ExperimentId::LayoutDump:
        spec.num_instances = 1;
        spec.layout = LayoutSource::Reference;
        break;
    default:
        spec.solvers = {StrategyKind::TabuSearch, StrategyKind::GlobalSearch, StrategyKind::Random,
                        StrategyKind::ChannelGain, StrategyKind::EveAwareChannelGain};
        break;
    }
    return spec;
}

ScenarioConfig apply_sweep_value(const ScenarioConfig& base, ExperimentId id, double value) {
    ScenarioConfig c = base;
    switch (id) {
    case ExperimentId::PowerSweep: c.led_power_dbm = value; break;
    case ExperimentId::UeCountSweep:
    case ExperimentId::Convergence: c.num_ues = static_cast<int>(std::lround(value)); break;
    case ExperimentId::EveFovSweep: c.eve_fov_deg = value; break;
    case ExperimentId::UeFovSweep: c.ue_fov_deg = value; break;
    case ExperimentId::LocalizationErrorSweep: c.eve_localization_error_m = value; break;
    case ExperimentId::LayoutDump: break;
    }
    return c;
}

void validate(const ExperimentSpec& spec) {
    check_parameter(!spec.sweep.empty(), "sweep values must not be empty");
    check_parameter(spec.num_instances >= 1, "num_instances must be >= 1");
    if (spec.id != ExperimentId::LayoutDump)
        check_parameter(!spec.solvers.empty(), "solver list must not be empty");
    if (spec.ts_max_iterations) check_parameter(*spec.ts_max_iterations >= 1, "tabu max_iterations must be >= 1");
    if (spec.ts_repetition_threshold)
        check_parameter(*spec.ts_repetition_threshold >= 1, "tabu repetition_threshold must be >= 1");
    for (double v : spec.sweep) validate(apply_sweep_value(spec.base, spec.id, v));
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    validate(spec);
    ExperimentResult result;
    result.spec = spec;

    if (spec.id == ExperimentId::LayoutDump) {
        if (spec.layout == LayoutSource::Reference) {
            result.layout = reference_layout(spec.base);
        } else {
            Rng rng(derive_seed(spec.base.rng_seed, {0}));
            auto sampled = sample_feasible_instance(spec.base, rng);
            result.layout = std::move(sampled.scenario);
            result.resampled_instances = sampled.resamples;
        }
        return result;
    }

    std::vector<StrategyKind> solvers;
    for (StrategyKind s : spec.solvers) {
        if (std::find(solvers.begin(), solvers.end(), s) == solvers.end()) solvers.push_back(s);
    }
    if (spec.id == ExperimentId::Convergence) {
        for (StrategyKind s : {StrategyKind::TabuSearch, StrategyKind::GlobalSearch}) {
            if (std::find(solvers.begin(), solvers.end(), s) == solvers.end()) solvers.push_back(s);
        }
    } else if (!spec.force_oracle) {
        const int leds = spec.base.led_grid.rows * spec.base.led_grid.cols;
        const auto gs = std::find(solvers.begin(), solvers.end(), StrategyKind::GlobalSearch);
        if (gs != solvers.end() && max_ues(spec) > kOracleMaxUes && leds >= kOracleGridThreshold) {
            solvers.erase(gs);
            result.notes.push_back("GlobalSearch disabled: more than " + std::to_string(kOracleMaxUes) +
                                   " UEs on a grid of " + std::to_string(leds) +
                                   " LEDs (pass --force-oracle to keep it)");
        }
    }
    check_parameter(!solvers.empty(), "no solver left to run");
    result.solvers = solvers;

    const std::size_t sweeps = spec.sweep.size();
    const std::size_t instances = static_cast<std::size_t>(spec.num_instances);
    const std::size_t units = sweeps * instances;
    std::vector<UnitOutcome> outcomes(units);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t u = next++; u < units; u = next++) {
            try {
                outcomes[u] = run_unit(spec, solvers, spec.sweep[u / instances], static_cast<int>(u % instances));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = units;
            }
        }
    };
    unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, units));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    for (std::size_t s = 0; s < sweeps; ++s) {
        for (std::size_t j = 0; j < solvers.size(); ++j) {
            ResultRow row;
            row.experiment = spec.id;
            row.sweep_value = spec.sweep[s];
            row.solver = solvers[j];
            row.seed = spec.base.rng_seed;
            row.n = spec.num_instances;
            for (std::size_t i = 0; i < instances; ++i) row.objectives.push_back(outcomes[s * instances + i].objectives[j]);
            double sum = 0.0;
            for (double v : row.objectives) sum += v;
            row.mean = sum / row.n;
            if (row.n > 1) {
                double ss = 0.0;
                for (double v : row.objectives) ss += (v - row.mean) * (v - row.mean);
                row.std_error = std::sqrt(ss / (row.n - 1)) / std::sqrt(static_cast<double>(row.n));
            }
            result.rows.push_back(std::move(row));
        }
    }
    for (auto& o : outcomes) {
        result.resampled_instances += o.resamples;
        result.strategy_repairs += o.repairs;
        if (o.convergence) result.convergence.push_back(std::move(*o.convergence));
    }
    return result;
}

} // namespace vlcsec
