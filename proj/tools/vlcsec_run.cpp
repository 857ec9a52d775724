// vlcsec-run: seeded Monte-Carlo experiments for LED selection under an
// eavesdropper.
//
//   vlcsec-run --experiment power_sweep --instances 500 --seed 7 --out runs/power
//   vlcsec-run --config sweep.json --solvers TabuSearch,ChannelGain --out runs/x
//   vlcsec-run --experiment layout_dump --out runs/layout

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "vlcsec/error.hpp"
#include "vlcsec/experiment.hpp"
#include "vlcsec/results_io.hpp"

namespace {

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw vlcsec::IoError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte-Carlo LED selection experiments (tabu search vs fixed strategies vs exhaustive search)"};

    std::string experiment;
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> instances;
    std::string out_dir = "results";
    std::string solvers;
    std::string sweep;
    bool force_oracle = false;
    bool reference_layout = false;
    std::optional<unsigned> threads;
    bool quiet = false;

    app.add_option("--experiment", experiment,
                   "convergence | power_sweep | ue_count_sweep | eve_fov_sweep | ue_fov_sweep | "
                   "localization_error_sweep | layout_dump");
    app.add_option("--config", config_path, "JSON experiment config; flags override its values")
        ->check(CLI::ExistingFile);
    app.add_option("--seed", seed, "master seed");
    app.add_option("--instances", instances, "Monte-Carlo instances per sweep value")->check(CLI::PositiveNumber);
    app.add_option("--out", out_dir, "output directory")->capture_default_str();
    app.add_option("--solvers", solvers,
                   "comma-separated: TabuSearch,GlobalSearch,Random,ChannelGain,EveAwareChannelGain");
    app.add_option("--sweep", sweep, "comma-separated sweep values replacing the default grid");
    app.add_flag("--force-oracle", force_oracle, "keep GlobalSearch on large instances");
    app.add_flag("--reference-layout", reference_layout, "use the fixed 5-UE layout instead of random rooms");
    app.add_option("--threads", threads, "worker threads (0 = all cores)");
    app.add_flag("-q,--quiet", quiet, "no summary on stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        vlcsec::ExperimentSpec spec;
        if (!config_path.empty()) {
            spec = vlcsec::spec_from_json(read_file(config_path));
            if (!experiment.empty() && experiment != vlcsec::to_string(spec.id)) {
                // Flag wins; keep the config's scenario and solver choices.
                const auto id = vlcsec::parse_experiment(experiment);
                if (!id) throw vlcsec::InvalidParameterError("unknown experiment '" + experiment + "'");
                spec.id = *id;
                spec.sweep = vlcsec::default_sweep(*id);
            }
        } else {
            const auto id = vlcsec::parse_experiment(experiment.empty() ? "power_sweep" : experiment);
            if (!id) throw vlcsec::InvalidParameterError("unknown experiment '" + experiment + "'");
            spec = vlcsec::default_spec(*id);
        }
        if (seed) spec.base.rng_seed = *seed;
        if (instances) spec.num_instances = *instances;
        if (app.count("--solvers")) spec.solvers = vlcsec::parse_solver_list(solvers);
        if (!sweep.empty()) {
            spec.sweep.clear();
            std::stringstream ss(sweep);
            for (std::string item; std::getline(ss, item, ',');) {
                if (!item.empty()) spec.sweep.push_back(std::stod(item));
            }
        }
        if (force_oracle) spec.force_oracle = true;
        if (reference_layout) spec.layout = vlcsec::LayoutSource::Reference;
        if (threads) spec.threads = *threads;

        const std::string started = utc_now();
        const auto result = vlcsec::run_experiment(spec);
        const auto written = vlcsec::write_results(result, out_dir, started, utc_now());

        if (!quiet) {
            for (const auto& note : result.notes) std::cerr << "note: " << note << '\n';
            vlcsec::write_results_csv(result, std::cout);
            for (const auto& p : written) std::cerr << "wrote " << p.string() << '\n';
        }
    } catch (const vlcsec::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: bad number in --sweep: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
