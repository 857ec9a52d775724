#include <string>

#include "json_support.hpp"
#include "vlcsec/error.hpp"
#include "vlcsec/units.hpp"

namespace vlcsec {

namespace {

json point(Point3 p) { return json::array({p.x, p.y, p.z}); }

Point3 point_from(const json& j) {
    if (!j.is_array() || j.size() != 3) throw InvalidParameterError("expected [x, y, z]");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json receiver_json(const Receiver& r) {
    return json{{"position", point(r.position)},
                {"fov_deg", rad_to_deg(r.fov)},
                {"pd_area", r.pd_area},
                {"refractive_index", r.refractive_index},
                {"filter_gain", r.filter_gain},
                {"orientation", point(r.orientation)}};
}

Receiver receiver_from(const json& j) {
    Receiver r;
    r.position = point_from(j.at("position"));
    r.fov = deg_to_rad(j.at("fov_deg").get<double>());
    r.pd_area = j.value("pd_area", r.pd_area);
    r.refractive_index = j.value("refractive_index", r.refractive_index);
    r.filter_gain = j.value("filter_gain", r.filter_gain);
    if (j.contains("orientation")) r.orientation = point_from(j.at("orientation"));
    return r;
}

template <class T>
void read_if(const json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

} // namespace

json to_json_value(const ScenarioConfig& c) {
    return json{{"room", {c.room.width, c.room.depth, c.room.height}},
                {"led_grid", {c.led_grid.rows, c.led_grid.cols}},
                {"led_power_dbm", c.led_power_dbm},
                {"num_ues", c.num_ues},
                {"ue_fov_deg", c.ue_fov_deg},
                {"eve_fov_deg", c.eve_fov_deg},
                {"eve_localization_error_m", c.eve_localization_error_m},
                {"noise_dbm", c.noise_dbm},
                {"rng_seed", c.rng_seed},
                {"receiver_height", c.receiver_height},
                {"pd_area", c.pd_area},
                {"refractive_index", c.refractive_index},
                {"filter_gain", c.filter_gain},
                {"half_intensity_deg", c.half_intensity_deg}};
}

ScenarioConfig config_from_json_value(const json& j, ScenarioConfig c) {
    if (!j.is_object()) throw InvalidParameterError("scenario config must be a JSON object");
    if (j.contains("room")) {
        const auto& r = j.at("room");
        c.room = Room{r.at(0).get<double>(), r.at(1).get<double>(), r.at(2).get<double>()};
    }
    if (j.contains("led_grid")) {
        const auto& g = j.at("led_grid");
        c.led_grid = LedGrid{g.at(0).get<int>(), g.at(1).get<int>()};
    }
    read_if(j, "led_power_dbm", c.led_power_dbm);
    read_if(j, "num_ues", c.num_ues);
    read_if(j, "ue_fov_deg", c.ue_fov_deg);
    read_if(j, "eve_fov_deg", c.eve_fov_deg);
    read_if(j, "eve_localization_error_m", c.eve_localization_error_m);
    read_if(j, "noise_dbm", c.noise_dbm);
    read_if(j, "rng_seed", c.rng_seed);
    read_if(j, "receiver_height", c.receiver_height);
    read_if(j, "pd_area", c.pd_area);
    read_if(j, "refractive_index", c.refractive_index);
    read_if(j, "filter_gain", c.filter_gain);
    read_if(j, "half_intensity_deg", c.half_intensity_deg);
    return c;
}

std::string config_to_json(const ScenarioConfig& config) { return to_json_value(config).dump(2); }

ScenarioConfig config_from_json(std::string_view text) {
    try {
        return config_from_json_value(json::parse(text));
    } catch (const json::exception& e) {
        throw InvalidParameterError(std::string("bad scenario config: ") + e.what());
    }
}

std::string scenario_to_json(const Scenario& s) {
    json leds = json::array();
    for (const auto& e : s.leds) {
        leds.push_back({{"position", point(e.position)},
                        {"half_intensity_deg", rad_to_deg(e.half_intensity_angle)},
                        {"power_w", e.power},
                        {"orientation", point(e.orientation)}});
    }
    json ues = json::array();
    for (const auto& r : s.ues) ues.push_back(receiver_json(r));
    const json doc{{"room", {s.room.width, s.room.depth, s.room.height}},
                   {"noise_w", s.noise.variance},
                   {"leds", leds},
                   {"ues", ues},
                   {"eve_true", receiver_json(s.eve_true)},
                   {"eve_estimated", receiver_json(s.eve_estimated)}};
    return doc.dump(2);
}

Scenario scenario_from_json(std::string_view text) {
    try {
        const json j = json::parse(text);
        Scenario s;
        const auto& room = j.at("room");
        s.room = Room{room.at(0).get<double>(), room.at(1).get<double>(), room.at(2).get<double>()};
        s.noise = NoiseModel{j.at("noise_w").get<double>()};
        for (const auto& e : j.at("leds")) {
            Emitter led;
            led.position = point_from(e.at("position"));
            led.half_intensity_angle = deg_to_rad(e.at("half_intensity_deg").get<double>());
            led.power = e.at("power_w").get<double>();
            if (e.contains("orientation")) led.orientation = point_from(e.at("orientation"));
            s.leds.push_back(led);
        }
        for (const auto& r : j.at("ues")) s.ues.push_back(receiver_from(r));
        s.eve_true = receiver_from(j.at("eve_true"));
        s.eve_estimated = j.contains("eve_estimated") ? receiver_from(j.at("eve_estimated")) : s.eve_true;
        validate(s);
        return s;
    } catch (const json::exception& e) {
        throw InvalidParameterError(std::string("bad scenario file: ") + e.what());
    }
}

} // namespace vlcsec
