#include "vlcsec/channel_model.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "vlcsec/error.hpp"

namespace vlcsec {

namespace {

bool is_unit(Vec3 v) { return std::abs(norm(v) - 1.0) < 1e-9; }

} // namespace

void validate(const Emitter& e) {
    check_parameter(is_finite(e.position), "emitter position must be finite");
    check_parameter(e.half_intensity_angle >= kMinHalfIntensityAngle &&
                        e.half_intensity_angle < std::numbers::pi / 2,
                    "half-intensity angle must lie in [1 deg, 90 deg)");
    check_parameter(is_unit(e.orientation), "emitter orientation must be a unit vector");
    check_parameter(e.power >= 0.0, "emitter power must be non-negative");
}

void validate(const Receiver& r) {
    check_parameter(is_finite(r.position), "receiver position must be finite");
    check_parameter(r.fov > 0.0 && r.fov <= std::numbers::pi / 2, "receiver FoV must lie in (0, 90 deg]");
    check_parameter(r.pd_area > 0.0, "photodiode area must be positive");
    check_parameter(r.refractive_index >= 1.0, "refractive index must be >= 1");
    check_parameter(r.filter_gain > 0.0, "optical filter gain must be positive");
    check_parameter(is_unit(r.orientation), "receiver orientation must be a unit vector");
}

double lambertian_order(double half_intensity_angle) {
    check_parameter(half_intensity_angle >= kMinHalfIntensityAngle &&
                        half_intensity_angle < std::numbers::pi / 2,
                    "half-intensity angle out of range: " + std::to_string(half_intensity_angle));
    const double order = -1.0 / std::log2(std::cos(half_intensity_angle));
    // Radian inputs carry rounding error (cos(pi/3) != 0.5 in binary), so an
    // order within a few ulp of an integer is that integer.
    const double nearest = std::round(order);
    if (std::abs(order - nearest) <= 4.0 * std::numeric_limits<double>::epsilon() * nearest) return nearest;
    return order;
}

double concentrator_gain(double incidence_angle, double fov, double refractive_index) {
    check_parameter(incidence_angle >= 0.0 && incidence_angle <= std::numbers::pi,
                    "incidence angle must lie in [0, pi]");
    check_parameter(fov > 0.0 && fov <= std::numbers::pi / 2, "FoV must lie in (0, pi/2]");
    if (incidence_angle > fov) return 0.0;
    const double s = std::sin(fov);
    return refractive_index * refractive_index / (s * s);
}

double channel_gain(const Emitter& emitter, const Receiver& receiver) {
    const Vec3 ray = receiver.position - emitter.position;
    const double d = norm(ray);
    if (d == 0.0) throw DegenerateGeometryError("emitter and receiver are colocated");

    const double cos_irradiance = dot(emitter.orientation, ray) / d;
    const double cos_incidence = -dot(receiver.orientation, ray) / d;
    if (cos_irradiance < 0.0 || cos_incidence < 0.0) return 0.0;

    const double incidence = angle_between(receiver.orientation, emitter.position - receiver.position);
    const double concentrator = concentrator_gain(incidence, receiver.fov, receiver.refractive_index);
    if (concentrator == 0.0) return 0.0;

    const double order = lambertian_order(emitter.half_intensity_angle);
    return (order + 1.0) * receiver.pd_area / (2.0 * std::numbers::pi * d * d) *
           std::pow(cos_irradiance, order) * cos_incidence * concentrator * receiver.filter_gain;
}

ChannelTable tabulate_channels(std::span<const Emitter> leds, std::span<const Receiver> ues,
                               const Receiver& eve) {
    for (const auto& e : leds) validate(e);
    for (const auto& r : ues) validate(r);
    validate(eve);

    ChannelTable table;
    table.gains = GainMatrix(leds.size(), ues.size());
    table.eve_gains.assign(leds.size(), 0.0);
    table.reachable_sets.assign(ues.size(), {});
    table.led_power.reserve(leds.size());

    for (std::size_t k = 0; k < leds.size(); ++k) {
        table.led_power.push_back(leds[k].power);
        for (std::size_t m = 0; m < ues.size(); ++m) {
            const double h = channel_gain(leds[k], ues[m]);
            table.gains(k, m) = h;
            if (h > 0.0) table.reachable_sets[m].push_back(static_cast<int>(k));
        }
        const double g = channel_gain(leds[k], eve);
        table.eve_gains[k] = g;
        if (g > 0.0) table.eve_reachable_set.push_back(static_cast<int>(k));
    }
    return table;
}

ChannelTable build_channel_table(std::span<const Emitter> leds, std::span<const Receiver> ues,
                                 const Receiver& eve) {
    ChannelTable table = tabulate_channels(leds, ues, eve);
    for (std::size_t m = 0; m < table.reachable_sets.size(); ++m) {
        if (table.reachable_sets[m].empty())
            throw InfeasibleError("UE " + std::to_string(m) + " cannot reach any LED");
    }
    return table;
}

} // namespace vlcsec
