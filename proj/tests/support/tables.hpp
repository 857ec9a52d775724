#pragma once

// Hand-built channel tables for solver tests.

#include <cstddef>
#include <vector>

#include "vlcsec/channel_model.hpp"

namespace vlcsec::testing {

struct Link {
    int led;
    std::size_t ue;
    double gain;
};

// Reachable sets follow the gain > 0 rule, same as the channel model.
inline ChannelTable make_table(std::size_t leds, std::size_t ues, const std::vector<Link>& links,
                               std::vector<double> eve_gains = {}, double power = 1.0) {
    ChannelTable t;
    t.gains = GainMatrix(leds, ues);
    for (const auto& l : links) t.gains(static_cast<std::size_t>(l.led), l.ue) = l.gain;
    t.eve_gains = eve_gains.empty() ? std::vector<double>(leds, 0.0) : std::move(eve_gains);
    t.led_power.assign(leds, power);
    t.reachable_sets.assign(ues, {});
    for (std::size_t k = 0; k < leds; ++k) {
        for (std::size_t m = 0; m < ues; ++m)
            if (t.gains(k, m) > 0.0) t.reachable_sets[m].push_back(static_cast<int>(k));
        if (t.eve_gains[k] > 0.0) t.eve_reachable_set.push_back(static_cast<int>(k));
    }
    return t;
}

// Every UE reaches every LED with the same gain.
inline ChannelTable full_reach_table(std::size_t leds, std::size_t ues, double gain = 1e-5) {
    std::vector<Link> links;
    for (std::size_t k = 0; k < leds; ++k)
        for (std::size_t m = 0; m < ues; ++m) links.push_back({static_cast<int>(k), m, gain});
    return make_table(leds, ues, links);
}

} // namespace vlcsec::testing
