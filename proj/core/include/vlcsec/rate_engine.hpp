#pragma once

// Achievable-rate lower bounds for the UEs and for Eve, and the sum secrecy
// rate objective maximized by every solver.

#include <cstddef>
#include <numbers>
#include <vector>

#include "vlcsec/assignment.hpp"
#include "vlcsec/channel_model.hpp"

namespace vlcsec {

// e / (2 pi): SNR penalty of the capacity lower bound for amplitude-limited
// intensity modulation.
inline constexpr double kCapacityBoundFactor = std::numbers::e / (2.0 * std::numbers::pi);

struct NoiseModel {
    double variance = 0.0; // watts
};

void validate(const NoiseModel& noise);

struct RateReport {
    std::vector<double> ue_rates;
    std::vector<double> eve_rates;
    std::vector<double> secrecy_rates;
    double sum_secrecy_rate = 0.0;
};

// 0.5 * log2(1 + kCapacityBoundFactor * signal / (interference + noise)),
// with powers already squared.
double bounded_rate(double signal_power, double interference_power, double noise_variance);

// Rate of UE `ue` served by its assigned LED; LEDs picked by the other UEs
// interfere. Bits/s/Hz.
double ue_rate(const ChannelTable& table, const Assignment& a, std::size_t ue, NoiseModel noise);

// Eve's rate when decoding the stream meant for `ue`.
double eve_rate(const ChannelTable& table, const Assignment& a, std::size_t ue, NoiseModel noise);

// max(0, ue_rate - eve_rate).
double secrecy_rate(const ChannelTable& table, const Assignment& a, std::size_t ue, NoiseModel noise);

// Sum of secrecy_rate over UEs. Throws InfeasibleError for assignments that
// reuse an LED or pick an unreachable one.
double sum_secrecy_rate(const ChannelTable& table, const Assignment& a, NoiseModel noise);

RateReport evaluate_rates(const ChannelTable& table, const Assignment& a, NoiseModel noise);

} // namespace vlcsec
