#include "vlcsec/scenario.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "vlcsec/assignment.hpp"
#include "vlcsec/error.hpp"
#include "vlcsec/units.hpp"

namespace vlcsec {

namespace {

bool inside(const Room& room, Point3 p) {
    return p.x >= 0.0 && p.x <= room.width && p.y >= 0.0 && p.y <= room.depth && p.z >= 0.0 &&
           p.z <= room.height;
}

// Magenta triangles and the green circle of the published layout.
constexpr std::array<Point3, 5> kReferenceUes{{
    {1.34, 1.59, 0.8},
    {5.28, 6.05, 0.8},
    {8.66, 4.19, 0.8},
    {2.48, 5.89, 0.8},
    {7.07, 6.00, 0.8},
}};
constexpr Point3 kReferenceEve{2.13, 4.25, 0.8};

} // namespace

void validate(const ScenarioConfig& c) {
    check_parameter(c.room.width > 0 && c.room.depth > 0 && c.room.height > 0, "room dimensions must be positive");
    check_parameter(c.led_grid.rows >= 1 && c.led_grid.cols >= 1, "LED grid needs at least one row and column");
    check_parameter(c.num_ues >= 0, "num_ues must be non-negative");
    check_parameter(c.led_grid.rows * c.led_grid.cols >= c.num_ues, "need at least as many LEDs as UEs");
    check_parameter(c.ue_fov_deg > 0 && c.ue_fov_deg <= 90, "UE FoV must lie in (0, 90] degrees");
    check_parameter(c.eve_fov_deg > 0 && c.eve_fov_deg <= 90, "Eve FoV must lie in (0, 90] degrees");
    check_parameter(c.eve_localization_error_m >= 0, "localization error must be non-negative");
    check_parameter(c.receiver_height >= 0 && c.receiver_height < c.room.height,
                    "receiver plane must lie below the ceiling");
    check_parameter(std::isfinite(c.led_power_dbm) && std::isfinite(c.noise_dbm), "power levels must be finite");
    check_parameter(c.half_intensity_deg >= 1.0 && c.half_intensity_deg < 90.0,
                    "half-intensity angle must lie in [1, 90) degrees");
    check_parameter(c.pd_area > 0 && c.refractive_index >= 1 && c.filter_gain > 0, "invalid receiver optics");
}

void validate(const Scenario& s) {
    for (const auto& e : s.leds) {
        validate(e);
        check_parameter(inside(s.room, e.position), "LED outside the room");
    }
    for (const auto& r : s.ues) {
        validate(r);
        check_parameter(inside(s.room, r.position), "UE outside the room");
    }
    validate(s.eve_true);
    validate(s.eve_estimated);
    validate(s.noise);
}

std::vector<Emitter> place_led_grid(const ScenarioConfig& config) {
    const double dx = config.room.width / config.led_grid.cols;
    const double dy = config.room.depth / config.led_grid.rows;
    std::vector<Emitter> leds;
    leds.reserve(static_cast<std::size_t>(config.led_grid.rows * config.led_grid.cols));
    for (int r = 0; r < config.led_grid.rows; ++r) {
        for (int c = 0; c < config.led_grid.cols; ++c) {
            Emitter e;
            e.position = {(c + 0.5) * dx, (r + 0.5) * dy, config.room.height};
            e.half_intensity_angle = deg_to_rad(config.half_intensity_deg);
            e.power = dbm_to_watts(config.led_power_dbm);
            leds.push_back(e);
        }
    }
    return leds;
}

Receiver make_receiver(const ScenarioConfig& config, Point3 position, double fov_deg) {
    Receiver r;
    r.position = position;
    r.fov = deg_to_rad(fov_deg);
    r.pd_area = config.pd_area;
    r.refractive_index = config.refractive_index;
    r.filter_gain = config.filter_gain;
    return r;
}

Scenario sample_instance(const ScenarioConfig& config, Rng& rng) {
    validate(config);
    std::uniform_real_distribution<double> along_x(0.0, config.room.width);
    std::uniform_real_distribution<double> along_y(0.0, config.room.depth);
    std::uniform_real_distribution<double> bearing_dist(0.0, 2.0 * std::numbers::pi);
    const double z = config.receiver_height;

    Scenario s;
    s.room = config.room;
    s.leds = place_led_grid(config);
    s.noise = NoiseModel{dbm_to_watts(config.noise_dbm)};
    for (int m = 0; m < config.num_ues; ++m) {
        const double x = along_x(rng);
        const double y = along_y(rng);
        s.ues.push_back(make_receiver(config, {x, y, z}, config.ue_fov_deg));
    }
    const double ex = along_x(rng);
    const double ey = along_y(rng);
    const double bearing = bearing_dist(rng);
    s.eve_true = make_receiver(config, {ex, ey, z}, config.eve_fov_deg);

    const double err = config.eve_localization_error_m;
    const Point3 estimate{std::clamp(ex + err * std::cos(bearing), 0.0, config.room.width),
                          std::clamp(ey + err * std::sin(bearing), 0.0, config.room.depth), z};
    s.eve_estimated = make_receiver(config, estimate, config.eve_fov_deg);
    return s;
}

SampledScenario sample_feasible_instance(const ScenarioConfig& config, Rng& rng, int max_attempts) {
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Scenario s = sample_instance(config, rng);
        const ChannelTable table = tabulate_channels(s.leds, s.ues, s.eve_estimated);
        const bool reachable = std::none_of(table.reachable_sets.begin(), table.reachable_sets.end(),
                                            [](const auto& b) { return b.empty(); });
        if (reachable && has_feasible_assignment(table)) return {std::move(s), attempt};
    }
    throw InfeasibleError("no feasible instance after " + std::to_string(max_attempts) + " draws");
}

Scenario reference_layout(const ScenarioConfig& config) {
    ScenarioConfig c = config;
    c.room = Room{};
    c.led_grid = LedGrid{};
    c.receiver_height = 0.8;
    c.num_ues = static_cast<int>(kReferenceUes.size());
    validate(c);

    Scenario s;
    s.room = c.room;
    s.leds = place_led_grid(c);
    s.noise = NoiseModel{dbm_to_watts(c.noise_dbm)};
    for (const auto& p : kReferenceUes) s.ues.push_back(make_receiver(c, p, c.ue_fov_deg));
    s.eve_true = make_receiver(c, kReferenceEve, c.eve_fov_deg);
    s.eve_estimated = s.eve_true;
    return s;
}

ChannelTable build_channel_table(const Scenario& scenario, EveView view) {
    return build_channel_table(scenario.leds, scenario.ues,
                               view == EveView::True ? scenario.eve_true : scenario.eve_estimated);
}

} // namespace vlcsec
