#include "vlcsec/rate_engine.hpp"

#include <algorithm>
#include <cmath>

#include "vlcsec/error.hpp"

namespace vlcsec {

namespace {

// Received electrical power from `led` given per-LED gains `gain(led)`.
template <class GainFn>
double rate_for_stream(const ChannelTable& table, const Assignment& a, std::size_t ue,
                       NoiseModel noise, GainFn gain) {
    const auto power = [&](int led) {
        const double amplitude = table.led_power[led] * gain(led);
        return amplitude * amplitude;
    };
    const double signal = power(a[ue]);
    double interference = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (j != ue) interference += power(a[j]);
    }
    return bounded_rate(signal, interference, noise.variance);
}

} // namespace

void validate(const NoiseModel& noise) {
    check_parameter(noise.variance > 0.0 && std::isfinite(noise.variance),
                    "noise variance must be positive and finite");
}

double bounded_rate(double signal_power, double interference_power, double noise_variance) {
    const double sinr = kCapacityBoundFactor * signal_power / (interference_power + noise_variance);
    return 0.5 * std::log2(1.0 + sinr);
}

double ue_rate(const ChannelTable& table, const Assignment& a, std::size_t ue, NoiseModel noise) {
    return rate_for_stream(table, a, ue, noise, [&](int led) { return table.gains(led, ue); });
}

double eve_rate(const ChannelTable& table, const Assignment& a, std::size_t ue, NoiseModel noise) {
    return rate_for_stream(table, a, ue, noise, [&](int led) { return table.eve_gains[led]; });
}

double secrecy_rate(const ChannelTable& table, const Assignment& a, std::size_t ue, NoiseModel noise) {
    return std::max(0.0, ue_rate(table, a, ue, noise) - eve_rate(table, a, ue, noise));
}

double sum_secrecy_rate(const ChannelTable& table, const Assignment& a, NoiseModel noise) {
    validate(noise);
    require_feasible(table, a);
    double total = 0.0;
    for (std::size_t m = 0; m < a.size(); ++m) total += secrecy_rate(table, a, m, noise);
    return total;
}

RateReport evaluate_rates(const ChannelTable& table, const Assignment& a, NoiseModel noise) {
    validate(noise);
    require_feasible(table, a);
    RateReport report;
    for (std::size_t m = 0; m < a.size(); ++m) {
        report.ue_rates.push_back(ue_rate(table, a, m, noise));
        report.eve_rates.push_back(eve_rate(table, a, m, noise));
        report.secrecy_rates.push_back(std::max(0.0, report.ue_rates.back() - report.eve_rates.back()));
        report.sum_secrecy_rate += report.secrecy_rates.back();
    }
    return report;
}

} // namespace vlcsec
