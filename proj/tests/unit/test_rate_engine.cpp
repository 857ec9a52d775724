#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "support/oracles.hpp"
#include "support/tables.hpp"
#include "vlcsec/baselines.hpp"
#include "vlcsec/error.hpp"
#include "vlcsec/rate_engine.hpp"
#include "vlcsec/scenario.hpp"

using namespace vlcsec;
namespace oracle = vlcsec::testing;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

int led_at(const Scenario& s, double x, double y) {
    for (std::size_t k = 0; k < s.leds.size(); ++k)
        if (s.leds[k].position.x == x && s.leds[k].position.y == y) return static_cast<int>(k);
    return -1;
}

} // namespace

TEST_SUITE("rate_engine") {

TEST_CASE("unit conversions") {
    CHECK(dbm_to_watts(-98.0) == doctest::Approx(1.585e-13).epsilon(1e-3));
    CHECK(dbm_to_watts(23.0) == doctest::Approx(0.1995).epsilon(1e-3));
    CHECK(dbm_to_watts(30.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("single UE directly below an LED") {
    ScenarioConfig c;
    c.room = Room{10, 10, 3};
    c.led_grid = LedGrid{1, 1};
    c.num_ues = 1;
    Scenario s;
    s.room = c.room;
    s.leds = place_led_grid(c);
    s.ues = {make_receiver(c, {5, 5, 0.8}, 50.0)};
    s.eve_true = s.eve_estimated = make_receiver(c, {0.1, 0.1, 0.8}, 50.0);
    s.noise = NoiseModel{dbm_to_watts(-98.0)};
    const ChannelTable t = build_channel_table(s);
    const Assignment a({0});
    CHECK(rel(ue_rate(t, a, 0, s.noise), oracle::kDirectBelowRateDbm) < 1e-12);
    CHECK(eve_rate(t, a, 0, s.noise) == 0.0);
    CHECK(secrecy_rate(t, a, 0, s.noise) == ue_rate(t, a, 0, s.noise));

    const ChannelTable literal = oracle::make_table(1, 1, {{0, 0, oracle::kDirectBelowGain}}, {}, 0.2);
    CHECK(rel(ue_rate(literal, a, 0, NoiseModel{1.585e-13}), oracle::kDirectBelowRateRounded) < 1e-12);
}

TEST_CASE("bounded rate edge values") {
    CHECK(bounded_rate(0.0, 1.0, 1.0) == 0.0);
    CHECK(bounded_rate(0.0, 0.0, 1e-13) == 0.0);
    const double snr = 2.0 * std::numbers::pi / std::numbers::e; // makes the bound factor cancel
    CHECK(bounded_rate(snr, 0.0, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("noise must be positive") {
    CHECK_THROWS_AS(validate(NoiseModel{0.0}), InvalidParameterError);
    CHECK_THROWS_AS(validate(NoiseModel{-1.0}), InvalidParameterError);
    const ChannelTable t = oracle::full_reach_table(2, 1);
    CHECK_THROWS_AS(sum_secrecy_rate(t, Assignment({0}), NoiseModel{0.0}), InvalidParameterError);
}

TEST_CASE("rates are invariant under joint power and noise scaling") {
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Scenario s = oracle::random_small_scenario(gen);
        const ChannelTable t = build_channel_table(s);
        const Assignment a = channel_gain_strategy(t, ConflictPolicy::Repair);
        for (double c : {1e-3, 7.5, 1e4}) {
            ChannelTable scaled = t;
            for (double& p : scaled.led_power) p *= c;
            const NoiseModel noise{s.noise.variance * c * c};
            const RateReport base = evaluate_rates(t, a, s.noise);
            const RateReport other = evaluate_rates(scaled, a, noise);
            for (std::size_t m = 0; m < a.size(); ++m) {
                CHECK(rel(other.ue_rates[m], base.ue_rates[m]) < 1e-12);
                if (base.eve_rates[m] > 0) CHECK(rel(other.eve_rates[m], base.eve_rates[m]) < 1e-12);
                else CHECK(other.eve_rates[m] == 0.0);
            }
        }
    }
}

TEST_CASE("adding an interfering LED never raises a UE rate") {
    // UE 0 reaches LEDs 0..2; UE 1 uses one of them as interference for UE 0.
    const ChannelTable two = oracle::make_table(3, 2,
        {{0, 0, 3e-5}, {1, 0, 2e-5}, {2, 0, 1e-5}, {1, 1, 4e-5}, {2, 1, 1e-5}}, {}, 0.2);
    const ChannelTable one = oracle::make_table(3, 1, {{0, 0, 3e-5}, {1, 0, 2e-5}, {2, 0, 1e-5}}, {}, 0.2);
    const NoiseModel noise{1.585e-13};
    const double alone = ue_rate(one, Assignment({0}), 0, noise);
    CHECK(ue_rate(two, Assignment({0, 1}), 0, noise) < alone);
    CHECK(ue_rate(two, Assignment({0, 2}), 0, noise) < alone);
    CHECK(ue_rate(two, Assignment({0, 2}), 0, noise) > ue_rate(two, Assignment({0, 1}), 0, noise));
}

TEST_CASE("sum equals per-UE secrecy rates bit for bit and matches the reference") {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Scenario s = oracle::random_small_scenario(gen);
        const ChannelTable t = build_channel_table(s);
        for (const auto& x : oracle::all_feasible(t)) {
            const Assignment a(x);
            double total = 0.0;
            for (std::size_t m = 0; m < a.size(); ++m) {
                const double sr = secrecy_rate(t, a, m, s.noise);
                CHECK(sr == std::max(0.0, ue_rate(t, a, m, s.noise) - eve_rate(t, a, m, s.noise)));
                total += sr;
            }
            const double value = sum_secrecy_rate(t, a, s.noise);
            CHECK(value == total);
            CHECK(value >= 0.0);
            CHECK(value == doctest::Approx(oracle::reference_objective(t, x, s.noise.variance)).epsilon(1e-12));
            const RateReport r = evaluate_rates(t, a, s.noise);
            CHECK(r.sum_secrecy_rate == value);
        }
    }
}

TEST_CASE("secrecy rate clips at zero when Eve hears more") {
    // Eve sees LED 0 better than UE 0 does.
    const ChannelTable t = oracle::make_table(2, 1, {{0, 0, 1e-5}, {1, 0, 2e-5}}, {4e-5, 1e-6}, 0.2);
    const NoiseModel noise{1.585e-13};
    CHECK(eve_rate(t, Assignment({0}), 0, noise) > ue_rate(t, Assignment({0}), 0, noise));
    CHECK(secrecy_rate(t, Assignment({0}), 0, noise) == 0.0);
    CHECK(secrecy_rate(t, Assignment({1}), 0, noise) ==
          ue_rate(t, Assignment({1}), 0, noise) - eve_rate(t, Assignment({1}), 0, noise));
}

TEST_CASE("blind Eve gives the sum of UE rates") {
    std::mt19937_64 gen(9);
    for (int trial = 0; trial < 30; ++trial) {
        Scenario s = oracle::random_small_scenario(gen);
        s.eve_estimated.fov = 1e-7;
        s.eve_estimated.position.x += 0.01; // off every LED axis
        const ChannelTable t = build_channel_table(s);
        REQUIRE(t.eve_reachable_set.empty());
        const Assignment a = channel_gain_strategy(t, ConflictPolicy::Repair);
        double total = 0.0;
        for (std::size_t m = 0; m < a.size(); ++m) {
            CHECK(eve_rate(t, a, m, s.noise) == 0.0);
            total += ue_rate(t, a, m, s.noise);
        }
        CHECK(sum_secrecy_rate(t, a, s.noise) == total);
    }
}

TEST_CASE("Eve at the UE position with the same receiver hears the same rate") {
    ScenarioConfig c;
    c.num_ues = 1;
    const Scenario ref = reference_layout(c);
    Scenario s = ref;
    s.ues.resize(1);
    s.eve_estimated = s.ues[0];
    const ChannelTable t = build_channel_table(s);
    for (int k : t.reachable_sets[0]) {
        const Assignment a({k});
        CHECK(eve_rate(t, a, 0, s.noise) == ue_rate(t, a, 0, s.noise));
        CHECK(secrecy_rate(t, a, 0, s.noise) == 0.0);
    }
}

TEST_CASE("wider Eve FoV starts overhearing the third UE on the reference layout") {
    const Scenario narrow = reference_layout(ScenarioConfig{.eve_fov_deg = 60.0});
    const Scenario wide = reference_layout(ScenarioConfig{.eve_fov_deg = 70.0});
    const int led = led_at(narrow, 7.0, 5.0);
    REQUIRE(led >= 0);

    const ChannelTable tn = build_channel_table(narrow);
    const ChannelTable tw = build_channel_table(wide);
    Assignment partial(std::vector<int>(5, -1));
    partial[2] = led;
    const auto a = complete_assignment(tn, partial);
    REQUIRE(a.has_value());
    CHECK(eve_rate(tn, *a, 2, narrow.noise) == 0.0);
    CHECK(eve_rate(tw, *a, 2, wide.noise) > 0.0);
}

TEST_CASE("infeasible assignments are rejected") {
    const ChannelTable t = oracle::make_table(3, 2, {{0, 0, 1e-5}, {1, 0, 1e-5}, {1, 1, 1e-5}, {2, 1, 1e-5}});
    const NoiseModel noise{1e-13};
    CHECK_THROWS_AS(sum_secrecy_rate(t, Assignment({1, 1}), noise), InfeasibleError);
    CHECK_THROWS_AS(sum_secrecy_rate(t, Assignment({2, 1}), noise), InfeasibleError);
    CHECK_THROWS_AS(sum_secrecy_rate(t, Assignment({0}), noise), InfeasibleError);
    CHECK_THROWS_AS(sum_secrecy_rate(t, Assignment({0, 7}), noise), InfeasibleError);
    CHECK_NOTHROW(sum_secrecy_rate(t, Assignment({0, 1}), noise));
}

TEST_CASE("no UEs gives zero") {
    const ChannelTable t = oracle::make_table(4, 0, {});
    CHECK(sum_secrecy_rate(t, Assignment{}, NoiseModel{1e-13}) == 0.0);
}

} // TEST_SUITE
