#pragma once

// On-disk contract consumed by the plotting tools:
//   results.csv            experiment_id,sweep_value,solver,mean,stderr,n,seed
//   convergence_trace.csv  run,sweep_value,instance,iteration,current_value,best_value,evaluations
//   layout.csv             role,index,x,y,z,fov_deg
//   manifest.json          config echo, version, timestamps, run counters
// Floats are written with 17 significant digits so reruns diff cleanly.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "vlcsec/experiment.hpp"

namespace vlcsec {

inline constexpr std::string_view kResultsHeader = "experiment_id,sweep_value,solver,mean,stderr,n,seed";
inline constexpr std::string_view kTraceHeader =
    "run,sweep_value,instance,iteration,current_value,best_value,evaluations";
inline constexpr std::string_view kLayoutHeader = "role,index,x,y,z,fov_deg";

std::string format_double(double v);

void write_results_csv(const ExperimentResult& result, std::ostream& out);
void write_trace_csv(const ExperimentResult& result, std::ostream& out);
void write_layout_csv(const Scenario& scenario, std::ostream& out);

// `started` / `finished` are ISO-8601 strings supplied by the caller.
std::string manifest_json(const ExperimentResult& result, std::string_view started, std::string_view finished);

// Writes every artifact that applies to `result` into `out_dir` (created if
// missing) and returns the paths written. Throws IoError on failure.
std::vector<std::filesystem::path> write_results(const ExperimentResult& result,
                                                 const std::filesystem::path& out_dir,
                                                 std::string_view started, std::string_view finished);

// Experiment settings from a JSON config file body. Keys override the defaults
// of the named experiment:
//   {"experiment": "power_sweep", "scenario": {...}, "sweep": [...],
//    "num_instances": 500, "solvers": ["TabuSearch", ...],
//    "tabu": {"max_iterations": 250, "repetition_threshold": 5, "neighborhood": "single"},
//    "force_oracle": false, "threads": 0, "layout": "random",
//    "enumeration_budget": 10000000}
ExperimentSpec spec_from_json(std::string_view text);
std::string spec_to_json(const ExperimentSpec& spec);

std::vector<StrategyKind> parse_solver_list(std::string_view comma_separated);

} // namespace vlcsec
