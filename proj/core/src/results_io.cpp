#include "vlcsec/results_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include "json_support.hpp"
#include "vlcsec/error.hpp"
#include "vlcsec/units.hpp"

#ifndef VLCSEC_VERSION
#define VLCSEC_VERSION "unknown"
#endif

namespace vlcsec {

namespace {

std::string_view layout_name(LayoutSource s) { return s == LayoutSource::Reference ? "reference" : "random"; }

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw IoError("write to " + path.string() + " failed");
}

json spec_value(const ExperimentSpec& spec) {
    json solvers = json::array();
    for (auto s : spec.solvers) solvers.push_back(std::string(to_string(s)));
    json tabu = json::object();
    if (spec.ts_max_iterations) tabu["max_iterations"] = *spec.ts_max_iterations;
    if (spec.ts_repetition_threshold) tabu["repetition_threshold"] = *spec.ts_repetition_threshold;
    tabu["neighborhood"] = spec.ts_neighborhood == NeighborhoodKind::AllCoordinates ? "all" : "single";
    return json{{"experiment", std::string(to_string(spec.id))},
                {"scenario", to_json_value(spec.base)},
                {"sweep", spec.sweep},
                {"num_instances", spec.num_instances},
                {"solvers", solvers},
                {"tabu", tabu},
                {"force_oracle", spec.force_oracle},
                {"threads", spec.threads},
                {"layout", std::string(layout_name(spec.layout))},
                {"enumeration_budget", spec.enumeration_budget}};
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_results_csv(const ExperimentResult& result, std::ostream& out) {
    out << kResultsHeader << '\n';
    for (const auto& r : result.rows) {
        out << to_string(r.experiment) << ',' << format_double(r.sweep_value) << ',' << to_string(r.solver) << ','
            << format_double(r.mean) << ',' << format_double(r.std_error) << ',' << r.n << ',' << r.seed << '\n';
    }
}

void write_trace_csv(const ExperimentResult& result, std::ostream& out) {
    out << kTraceHeader << '\n';
    for (std::size_t run = 0; run < result.convergence.size(); ++run) {
        const auto& c = result.convergence[run];
        for (const auto& t : c.trace) {
            out << run << ',' << format_double(c.sweep_value) << ',' << c.instance << ',' << t.iteration << ','
                << format_double(t.current_value) << ',' << format_double(t.best_value) << ',' << t.evaluations
                << '\n';
        }
    }
}

void write_layout_csv(const Scenario& s, std::ostream& out) {
    out << kLayoutHeader << '\n';
    auto row = [&](std::string_view role, std::size_t i, Point3 p, double fov) {
        out << role << ',' << i << ',' << format_double(p.x) << ',' << format_double(p.y) << ','
            << format_double(p.z) << ',' << format_double(fov) << '\n';
    };
    for (std::size_t k = 0; k < s.leds.size(); ++k)
        row("led", k, s.leds[k].position, rad_to_deg(s.leds[k].half_intensity_angle));
    for (std::size_t m = 0; m < s.ues.size(); ++m) row("ue", m, s.ues[m].position, rad_to_deg(s.ues[m].fov));
    row("eve", 0, s.eve_true.position, rad_to_deg(s.eve_true.fov));
    row("eve_estimated", 0, s.eve_estimated.position, rad_to_deg(s.eve_estimated.fov));
}

std::string manifest_json(const ExperimentResult& result, std::string_view started, std::string_view finished) {
    json solvers = json::array();
    for (auto s : result.solvers) solvers.push_back(std::string(to_string(s)));
    json runs = json::array();
    for (const auto& c : result.convergence) {
        runs.push_back({{"sweep_value", c.sweep_value},
                        {"instance", c.instance},
                        {"ts_value", c.ts_value},
                        {"ts_evaluations", c.ts_evaluations},
                        {"ts_evaluations_to_best", c.ts_evaluations_to_best},
                        {"oracle_value", c.oracle_value},
                        {"oracle_evaluations", c.oracle_evaluations}});
    }
    json doc{{"tool", "vlcsec-run"},
             {"version", VLCSEC_VERSION},
             {"started_at", std::string(started)},
             {"finished_at", std::string(finished)},
             {"spec", spec_value(result.spec)},
             {"solvers_run", solvers},
             {"resampled_instances", result.resampled_instances},
             {"strategy_repairs", result.strategy_repairs},
             {"notes", result.notes}};
    if (!runs.empty()) doc["convergence"] = runs;
    return doc.dump(2);
}

std::vector<std::filesystem::path> write_results(const ExperimentResult& result,
                                                 const std::filesystem::path& out_dir,
                                                 std::string_view started, std::string_view finished) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

    std::vector<std::filesystem::path> written;
    auto emit = [&](const char* name, auto&& body) {
        const auto path = out_dir / name;
        auto out = open_for_write(path);
        body(out);
        finish(out, path);
        written.push_back(path);
    };
    if (!result.rows.empty()) emit("results.csv", [&](std::ostream& o) { write_results_csv(result, o); });
    if (!result.convergence.empty())
        emit("convergence_trace.csv", [&](std::ostream& o) { write_trace_csv(result, o); });
    if (result.layout) {
        emit("layout.csv", [&](std::ostream& o) { write_layout_csv(*result.layout, o); });
        emit("scenario.json", [&](std::ostream& o) { o << scenario_to_json(*result.layout) << '\n'; });
    }
    emit("manifest.json", [&](std::ostream& o) { o << manifest_json(result, started, finished) << '\n'; });
    return written;
}

std::vector<StrategyKind> parse_solver_list(std::string_view text) {
    std::vector<StrategyKind> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = text.substr(0, comma);
        if (!item.empty()) {
            auto kind = parse_strategy(item);
            if (!kind) throw InvalidParameterError("unknown solver '" + std::string(item) + "'");
            out.push_back(*kind);
        }
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

ExperimentSpec spec_from_json(std::string_view text) {
    try {
        const json j = json::parse(text);
        if (!j.is_object()) throw InvalidParameterError("experiment config must be a JSON object");
        const auto name = j.value("experiment", std::string("power_sweep"));
        const auto id = parse_experiment(name);
        if (!id) throw InvalidParameterError("unknown experiment '" + name + "'");

        ExperimentSpec spec = default_spec(*id);
        if (j.contains("scenario")) spec.base = config_from_json_value(j.at("scenario"), spec.base);
        if (j.contains("sweep")) spec.sweep = j.at("sweep").get<std::vector<double>>();
        spec.num_instances = j.value("num_instances", spec.num_instances);
        if (j.contains("solvers")) {
            spec.solvers.clear();
            for (const auto& s : j.at("solvers")) {
                const auto kind = parse_strategy(s.get<std::string>());
                if (!kind) throw InvalidParameterError("unknown solver '" + s.get<std::string>() + "'");
                spec.solvers.push_back(*kind);
            }
        }
        if (j.contains("tabu")) {
            const auto& t = j.at("tabu");
            if (t.contains("max_iterations")) spec.ts_max_iterations = t.at("max_iterations").get<int>();
            if (t.contains("repetition_threshold"))
                spec.ts_repetition_threshold = t.at("repetition_threshold").get<int>();
            if (t.contains("neighborhood")) {
                const auto n = t.at("neighborhood").get<std::string>();
                if (n == "single") spec.ts_neighborhood = NeighborhoodKind::SingleCoordinate;
                else if (n == "all") spec.ts_neighborhood = NeighborhoodKind::AllCoordinates;
                else throw InvalidParameterError("tabu.neighborhood must be 'single' or 'all'");
            }
        }
        spec.force_oracle = j.value("force_oracle", spec.force_oracle);
        spec.threads = j.value("threads", spec.threads);
        if (j.contains("layout")) {
            const auto layout = j.at("layout").get<std::string>();
            if (layout == "reference") spec.layout = LayoutSource::Reference;
            else if (layout == "random") spec.layout = LayoutSource::Random;
            else throw InvalidParameterError("layout must be 'random' or 'reference'");
        }
        spec.enumeration_budget = j.value("enumeration_budget", spec.enumeration_budget);
        return spec;
    } catch (const json::exception& e) {
        throw InvalidParameterError(std::string("bad experiment config: ") + e.what());
    }
}

std::string spec_to_json(const ExperimentSpec& spec) { return spec_value(spec).dump(2); }

} // namespace vlcsec
