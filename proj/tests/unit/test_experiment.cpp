#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "vlcsec/error.hpp"
#include "vlcsec/experiment.hpp"
#include "vlcsec/results_io.hpp"

using namespace vlcsec;
namespace fs = std::filesystem;

namespace {

ExperimentSpec tiny_spec(ExperimentId id, std::vector<double> sweep) {
    ExperimentSpec spec = default_spec(id);
    spec.sweep = std::move(sweep);
    spec.num_instances = 6;
    spec.base.rng_seed = 4242;
    return spec;
}

std::string results_csv(const ExperimentResult& r) {
    std::ostringstream out;
    write_results_csv(r, out);
    return out.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
    return out;
}

fs::path scratch_dir(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("vlcsec-test-" + name);
    fs::remove_all(p);
    return p;
}

} // namespace

TEST_SUITE("experiment") {

TEST_CASE("experiment names round-trip") {
    for (auto id : {ExperimentId::Convergence, ExperimentId::PowerSweep, ExperimentId::UeCountSweep,
                    ExperimentId::EveFovSweep, ExperimentId::UeFovSweep, ExperimentId::LocalizationErrorSweep,
                    ExperimentId::LayoutDump}) {
        CHECK(parse_experiment(to_string(id)) == id);
    }
    CHECK(to_string(ExperimentId::LocalizationErrorSweep) == "localization_error_sweep");
    CHECK_FALSE(parse_experiment("fig4").has_value());
}

TEST_CASE("default sweep grids") {
    CHECK(default_sweep(ExperimentId::PowerSweep) ==
          std::vector<double>{10, 12, 14, 16, 18, 20, 22, 24, 26, 28, 30});
    CHECK(default_sweep(ExperimentId::UeCountSweep) == std::vector<double>{1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(default_sweep(ExperimentId::EveFovSweep) == std::vector<double>{30, 40, 50, 60, 70, 80, 90});
    CHECK(default_sweep(ExperimentId::UeFovSweep) == std::vector<double>{30, 40, 50, 60, 70, 80, 90});
    CHECK(default_sweep(ExperimentId::LocalizationErrorSweep) ==
          std::vector<double>{0, 0.5, 1, 1.5, 2, 2.5, 3});
    CHECK(default_spec(ExperimentId::PowerSweep).num_instances == 500);
}

TEST_CASE("sweep values land on the right parameter") {
    const ScenarioConfig base;
    CHECK(apply_sweep_value(base, ExperimentId::PowerSweep, 14).led_power_dbm == 14);
    CHECK(apply_sweep_value(base, ExperimentId::UeCountSweep, 7).num_ues == 7);
    CHECK(apply_sweep_value(base, ExperimentId::EveFovSweep, 70).eve_fov_deg == 70);
    CHECK(apply_sweep_value(base, ExperimentId::UeFovSweep, 40).ue_fov_deg == 40);
    CHECK(apply_sweep_value(base, ExperimentId::LocalizationErrorSweep, 2.5).eve_localization_error_m == 2.5);
}

TEST_CASE("experiment validation refuses empty inputs") {
    ExperimentSpec spec = tiny_spec(ExperimentId::PowerSweep, {20});
    spec.solvers.clear();
    CHECK_THROWS_AS(run_experiment(spec), InvalidParameterError);
    spec = tiny_spec(ExperimentId::PowerSweep, {});
    CHECK_THROWS_AS(validate(spec), InvalidParameterError);
    spec = tiny_spec(ExperimentId::PowerSweep, {20});
    spec.num_instances = 0;
    CHECK_THROWS_AS(validate(spec), InvalidParameterError);
    spec = tiny_spec(ExperimentId::PowerSweep, {20});
    spec.ts_max_iterations = 0;
    CHECK_THROWS_AS(validate(spec), InvalidParameterError);
}

TEST_CASE("rows, per-instance ordering and oracle dominance") {
    ExperimentSpec spec = tiny_spec(ExperimentId::UeCountSweep, {2, 3});
    const ExperimentResult r = run_experiment(spec);
    REQUIRE(r.rows.size() == 2 * r.solvers.size());
    CHECK(r.solvers == spec.solvers);
    auto row = [&](std::size_t s, StrategyKind k) -> const ResultRow& {
        for (const auto& x : r.rows)
            if (x.sweep_value == spec.sweep[s] && x.solver == k) return x;
        FAIL("missing row");
        return r.rows.front();
    };
    for (std::size_t s = 0; s < 2; ++s) {
        const auto& gs = row(s, StrategyKind::GlobalSearch);
        const auto& ts = row(s, StrategyKind::TabuSearch);
        for (std::size_t i = 0; i < gs.objectives.size(); ++i) {
            CHECK(gs.objectives[i] >= ts.objectives[i]);
            CHECK(ts.objectives[i] >= 0.0);
            for (auto k : spec.solvers) CHECK(gs.objectives[i] >= row(s, k).objectives[i]);
        }
        CHECK(gs.n == 6);
        CHECK(gs.seed == 4242);
    }
}

TEST_CASE("reruns are byte identical and thread count does not matter") {
    ExperimentSpec spec = tiny_spec(ExperimentId::PowerSweep, {12, 24});
    spec.threads = 1;
    const std::string a = results_csv(run_experiment(spec));
    const std::string b = results_csv(run_experiment(spec));
    spec.threads = 4;
    const std::string c = results_csv(run_experiment(spec));
    CHECK(a == b);
    CHECK(a == c);
    spec.base.rng_seed = 4243;
    CHECK(results_csv(run_experiment(spec)) != a);
}

TEST_CASE("channel-gain strategy ignores Eve localization error") {
    ExperimentSpec spec = tiny_spec(ExperimentId::LocalizationErrorSweep, {0.0, 1.5, 3.0});
    spec.solvers = {StrategyKind::ChannelGain};
    const ExperimentResult r = run_experiment(spec);
    REQUIRE(r.rows.size() == 3);
    CHECK(r.rows[0].objectives == r.rows[1].objectives);
    CHECK(r.rows[0].objectives == r.rows[2].objectives);
}

TEST_CASE("oracle is dropped on large instances unless forced") {
    ExperimentSpec spec = tiny_spec(ExperimentId::UeCountSweep, {5});
    spec.num_instances = 2;
    spec.solvers = {StrategyKind::TabuSearch, StrategyKind::GlobalSearch};
    const ExperimentResult dropped = run_experiment(spec);
    CHECK(dropped.solvers == std::vector<StrategyKind>{StrategyKind::TabuSearch});
    REQUIRE(dropped.notes.size() == 1);
    CHECK(dropped.notes[0].find("GlobalSearch disabled") != std::string::npos);

    spec.force_oracle = true;
    const ExperimentResult kept = run_experiment(spec);
    CHECK(kept.solvers == spec.solvers);
    CHECK(kept.notes.empty());
}

TEST_CASE("convergence runs record traces and oracle values") {
    ExperimentSpec spec = tiny_spec(ExperimentId::Convergence, {3});
    spec.num_instances = 3;
    spec.solvers = {StrategyKind::TabuSearch};
    const ExperimentResult r = run_experiment(spec);
    CHECK(r.solvers.size() == 2);
    REQUIRE(r.convergence.size() == 3);
    for (const auto& run : r.convergence) {
        CHECK(run.oracle_value >= run.ts_value);
        CHECK(run.oracle_evaluations > 0);
        REQUIRE_FALSE(run.trace.empty());
        CHECK(run.trace.back().best_value == run.ts_value);
    }
    std::ostringstream out;
    write_trace_csv(r, out);
    const auto lines = lines_of(out.str());
    CHECK(lines.front() == kTraceHeader);
    CHECK(lines.size() > 3);
}

TEST_CASE("results CSV layout") {
    const ExperimentResult r = run_experiment(tiny_spec(ExperimentId::EveFovSweep, {40}));
    const auto lines = lines_of(results_csv(r));
    REQUIRE(lines.size() == 1 + r.rows.size());
    CHECK(lines[0] == "experiment_id,sweep_value,solver,mean,stderr,n,seed");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto cells = split(lines[i]);
        REQUIRE(cells.size() == 7);
        CHECK(cells[0] == "eve_fov_sweep");
        CHECK(cells[1] == "40");
        CHECK(parse_strategy(cells[2]).has_value());
        CHECK(std::stod(cells[3]) == r.rows[i - 1].mean);
        CHECK(cells[5] == "6");
        CHECK(cells[6] == "4242");
    }
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(2.0) == "2");
}

TEST_CASE("layout dump reproduces the reference coordinates") {
    const ExperimentResult r = run_experiment(default_spec(ExperimentId::LayoutDump));
    REQUIRE(r.layout.has_value());
    std::ostringstream out;
    write_layout_csv(*r.layout, out);
    const auto lines = lines_of(out.str());
    CHECK(lines[0] == kLayoutHeader);
    const std::vector<Point3> ues{{1.34, 1.59, 0.8}, {5.28, 6.05, 0.8}, {8.66, 4.19, 0.8},
                                  {2.48, 5.89, 0.8}, {7.07, 6.00, 0.8}};
    int leds = 0, seen_ues = 0, eves = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto c = split(lines[i]);
        REQUIRE(c.size() == 6);
        const Point3 p{std::stod(c[2]), std::stod(c[3]), std::stod(c[4])};
        if (c[0] == "led") ++leds;
        if (c[0] == "ue") {
            CHECK(p == ues[static_cast<std::size_t>(std::stoi(c[1]))]);
            ++seen_ues;
        }
        if (c[0] == "eve") {
            CHECK(p == Point3{2.13, 4.25, 0.8});
            ++eves;
        }
    }
    CHECK(leds == 25);
    CHECK(seen_ues == 5);
    CHECK(eves == 1);
}

TEST_CASE("write_results produces every file and a parseable manifest") {
    ExperimentSpec spec = tiny_spec(ExperimentId::PowerSweep, {20});
    spec.solvers = {StrategyKind::ChannelGain, StrategyKind::TabuSearch};
    const ExperimentResult r = run_experiment(spec);
    const fs::path dir = scratch_dir("write");
    const auto files = write_results(r, dir, "2026-01-01T00:00:00Z", "2026-01-01T00:00:01Z");
    CHECK(fs::exists(dir / "results.csv"));
    CHECK(fs::exists(dir / "manifest.json"));
    for (const auto& f : files) CHECK(fs::exists(f));

    std::ifstream in(dir / "manifest.json");
    const auto manifest = nlohmann::json::parse(in);
    CHECK(manifest.at("started_at") == "2026-01-01T00:00:00Z");
    CHECK(manifest.at("solvers_run").size() == 2);
    CHECK(manifest.contains("resampled_instances"));
    CHECK(manifest.contains("strategy_repairs"));
    fs::remove_all(dir);
}

TEST_CASE("unwritable output path is an I/O error") {
    const fs::path dir = scratch_dir("blocked");
    fs::create_directories(dir);
    std::ofstream(dir / "file") << "x";
    ExperimentSpec spec = tiny_spec(ExperimentId::PowerSweep, {20});
    spec.num_instances = 1;
    spec.solvers = {StrategyKind::ChannelGain};
    const ExperimentResult r = run_experiment(spec);
    CHECK_THROWS_AS(write_results(r, dir / "file" / "out", "a", "b"), IoError);
    fs::remove_all(dir);
}

TEST_CASE("experiment config JSON round-trip and solver lists") {
    ExperimentSpec spec = tiny_spec(ExperimentId::UeFovSweep, {35, 55});
    spec.ts_max_iterations = 77;
    spec.ts_neighborhood = NeighborhoodKind::AllCoordinates;
    spec.force_oracle = true;
    const ExperimentSpec back = spec_from_json(spec_to_json(spec));
    CHECK(spec_to_json(back) == spec_to_json(spec));
    CHECK(back.sweep == spec.sweep);
    CHECK(back.ts_max_iterations == 77);
    CHECK(back.ts_neighborhood == NeighborhoodKind::AllCoordinates);

    CHECK(parse_solver_list("TabuSearch,ChannelGain") ==
          std::vector<StrategyKind>{StrategyKind::TabuSearch, StrategyKind::ChannelGain});
    CHECK_THROWS_AS(parse_solver_list("TabuSearch,Magic"), InvalidParameterError);
    CHECK_THROWS_AS(spec_from_json(R"({"experiment":"nope"})"), InvalidParameterError);
    CHECK_THROWS_AS(spec_from_json(R"({"tabu":{"neighborhood":"pairs"}})"), InvalidParameterError);
}

} // TEST_SUITE
