#pragma once

// Indoor room layouts: LED grid on the ceiling, UEs and Eve on the receiver
// plane, and Eve's position as known to the algorithms (true position plus
// a localization error).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vlcsec/channel_model.hpp"
#include "vlcsec/random.hpp"
#include "vlcsec/rate_engine.hpp"

namespace vlcsec {

struct Room {
    double width = 10.0;  // x extent, m
    double depth = 10.0;  // y extent, m
    double height = 3.0;  // LED plane, m
};

struct LedGrid {
    int rows = 5; // along y
    int cols = 5; // along x
};

struct ScenarioConfig {
    Room room;
    LedGrid led_grid;
    double led_power_dbm = 23.0;
    int num_ues = 5;
    double ue_fov_deg = 50.0;
    double eve_fov_deg = 50.0;
    double eve_localization_error_m = 0.0;
    double noise_dbm = -98.0;
    std::uint64_t rng_seed = 1;
    double receiver_height = 0.8;
    double pd_area = 1e-4;
    double refractive_index = 1.5;
    double filter_gain = 1.0;
    double half_intensity_deg = 60.0;
};

void validate(const ScenarioConfig& config);

struct Scenario {
    Room room;
    std::vector<Emitter> leds;
    std::vector<Receiver> ues;
    Receiver eve_true;
    Receiver eve_estimated;
    NoiseModel noise;
};

void validate(const Scenario& scenario);

// Which Eve position fills ChannelTable::eve_gains.
enum class EveView { Estimated, True };

// Cell-centered rows x cols grid at ceiling height, facing down.
std::vector<Emitter> place_led_grid(const ScenarioConfig& config);

Receiver make_receiver(const ScenarioConfig& config, Point3 position, double fov_deg);

// Draws UE (x, y) then Eve (x, y) uniformly on the floor, then a bearing
// for the localization offset. All draws happen regardless of config so the
// stream stays aligned across sweeps of the error magnitude.
Scenario sample_instance(const ScenarioConfig& config, Rng& rng);

struct SampledScenario {
    Scenario scenario;
    int resamples = 0;
};

// Redraws until every UE reaches some LED and a one-to-one assignment
// exists. Throws InfeasibleError after `max_attempts` failures.
SampledScenario sample_feasible_instance(const ScenarioConfig& config, Rng& rng, int max_attempts = 10000);

// Five UEs and one Eve at fixed coordinates in the 10 x 10 x 3 m room with
// the 5 x 5 grid. UE/Eve FoV, power, and noise come from `config`.
Scenario reference_layout(const ScenarioConfig& config = {});

ChannelTable build_channel_table(const Scenario& scenario, EveView view = EveView::Estimated);

// Human-readable JSON for fixtures and debugging.
std::string scenario_to_json(const Scenario& scenario);
Scenario scenario_from_json(std::string_view text);

std::string config_to_json(const ScenarioConfig& config);
// Missing keys keep their defaults.
ScenarioConfig config_from_json(std::string_view text);

} // namespace vlcsec
