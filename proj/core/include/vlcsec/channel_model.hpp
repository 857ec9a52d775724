#pragma once

// Line-of-sight Lambertian channel between ceiling LEDs and photodiode
// receivers, and the LED -> UE gain table every solver works from.

#include <cstddef>
#include <span>
#include <vector>

#include "vlcsec/geometry.hpp"
#include "vlcsec/units.hpp"

namespace vlcsec {

// Below this the Lambertian order overflows for any practical use.
inline constexpr double kMinHalfIntensityAngle = deg_to_rad(1.0);

struct Emitter {
    Point3 position;
    double half_intensity_angle = deg_to_rad(60.0); // radians
    Vec3 orientation{0.0, 0.0, -1.0};
    double power = 0.0; // watts; scales the transmitted symbol amplitude
};

struct Receiver {
    Point3 position;
    double fov = deg_to_rad(50.0); // half-angle, radians
    double pd_area = 1e-4;         // m^2
    double refractive_index = 1.5;
    double filter_gain = 1.0;
    Vec3 orientation{0.0, 0.0, 1.0};
};

void validate(const Emitter& e);
void validate(const Receiver& r);

// Row-major K x M matrix, entry (led, ue).
class GainMatrix {
public:
    GainMatrix() = default;
    GainMatrix(std::size_t num_leds, std::size_t num_ues)
        : leds_(num_leds), ues_(num_ues), data_(num_leds * num_ues, 0.0) {}

    double operator()(std::size_t led, std::size_t ue) const { return data_[led * ues_ + ue]; }
    double& operator()(std::size_t led, std::size_t ue) { return data_[led * ues_ + ue]; }

    std::size_t num_leds() const { return leds_; }
    std::size_t num_ues() const { return ues_; }
    std::span<const double> values() const { return data_; }

private:
    std::size_t leds_ = 0;
    std::size_t ues_ = 0;
    std::vector<double> data_;
};

struct ChannelTable {
    GainMatrix gains;                              // h(k, m)
    std::vector<double> eve_gains;                 // g(k)
    std::vector<std::vector<int>> reachable_sets;  // B_m, ascending LED index
    std::vector<int> eve_reachable_set;
    std::vector<double> led_power;                 // watts, per LED

    std::size_t num_leds() const { return gains.num_leds(); }
    std::size_t num_ues() const { return gains.num_ues(); }
};

// gamma = -1 / log2(cos(half_intensity_angle)).
double lambertian_order(double half_intensity_angle);

// Constant-gain concentrator q^2 / sin^2(fov) inside the field of view,
// zero outside. The boundary incidence == fov is inside.
double concentrator_gain(double incidence_angle, double fov, double refractive_index);

// DC optical gain of the direct path. Exactly zero when the receiver sits
// behind the emitter, the emitter behind the receiver, or outside the FoV.
double channel_gain(const Emitter& emitter, const Receiver& receiver);

// Fills every (LED, UE) gain and the Eve gain vector without judging
// feasibility. Reachability is the predicate gain > 0.
ChannelTable tabulate_channels(std::span<const Emitter> leds, std::span<const Receiver> ues,
                               const Receiver& eve);

// As tabulate_channels, but throws InfeasibleError when some UE can reach
// no LED.
ChannelTable build_channel_table(std::span<const Emitter> leds, std::span<const Receiver> ues,
                                 const Receiver& eve);

} // namespace vlcsec
