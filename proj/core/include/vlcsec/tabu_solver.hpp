#pragma once

// Tabu search over LED assignments.
//
// Each iteration draws M neighbor vectors of the current assignment and
// tries them best-first: the first one that beats the best-so-far objective
// (aspiration) or adds no link that is on the tabu list becomes the new
// current vector. The tabu list is a K x M matrix of cool-down counters: all
// positive entries tick down once per iteration and the links of a committed
// move are set to M, so a link a UE abandons stays forbidden for M
// iterations.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vlcsec/assignment.hpp"
#include "vlcsec/channel_model.hpp"
#include "vlcsec/random.hpp"
#include "vlcsec/rate_engine.hpp"

namespace vlcsec {

enum class NeighborhoodKind {
    // Neighbor q moves UE q to a random other LED in B_q; a UE displaced
    // from that LED swaps into UE q's old one when it can.
    SingleCoordinate,
    // Every coordinate of every neighbor is re-drawn from B_m minus the
    // current LED.
    AllCoordinates,
};

struct TsConfig {
    int max_iterations = 1;
    int repetition_threshold = 1;
    std::uint64_t rng_seed = 0;
    NeighborhoodKind neighborhood = NeighborhoodKind::SingleCoordinate;

    // max_iterations = 50 M, repetition_threshold = M.
    static TsConfig for_ues(std::size_t num_ues, std::uint64_t seed);
};

void validate(const TsConfig& config);

class TabuMatrix {
public:
    TabuMatrix() = default;
    TabuMatrix(std::size_t num_leds, std::size_t num_ues)
        : ues_(num_ues), data_(num_leds * num_ues, 0) {}

    int operator()(int led, std::size_t ue) const { return data_[static_cast<std::size_t>(led) * ues_ + ue]; }
    int& operator()(int led, std::size_t ue) { return data_[static_cast<std::size_t>(led) * ues_ + ue]; }

    std::span<const int> values() const { return data_; }

    void decrement() {
        for (int& v : data_) {
            if (v > 0) --v;
        }
    }

private:
    std::size_t ues_ = 0;
    std::vector<int> data_;
};

struct TabuState {
    TabuMatrix tabu;
    Assignment current;
    double current_value = 0.0;
    Assignment best;
    double best_value = 0.0;
    int iteration = 0;
    int repetition_count = 0;
    bool local_max = false;
    std::size_t evaluations = 0;
};

struct ScoredCandidate {
    Assignment assignment;
    double value = 0.0;
    std::size_t index = 0; // position in the generated neighborhood
};

struct TraceRecord {
    int iteration = 0;
    double current_value = 0.0;
    double best_value = 0.0;
    std::size_t evaluations = 0; // cumulative objective evaluations
};

struct TsResult {
    Assignment best;
    double best_value = 0.0;
    std::vector<TraceRecord> trace;   // entry 0 is the initial solution
    std::size_t evaluations = 0;
    std::size_t evaluations_to_best = 0; // count when best_value was last raised
    int iterations = 0;
};

// Uniform over feasible vectors by rejection; falls back to a greedy draw
// plus augmenting-path repair when collisions make rejection too slow.
// Throws InfeasibleError if no feasible vector exists.
Assignment random_feasible_assignment(const ChannelTable& table, Rng& rng);

TabuState initial_state(const ChannelTable& table, NoiseModel noise, Assignment start);

// M neighbors of state.current. Coordinates with |B_m| = 1 stay fixed.
// AllCoordinates: collisions are re-drawn in UE order from B_m minus LEDs
// already taken; when that set is empty the current LED is kept if free,
// and otherwise an augmenting path restores feasibility.
// SingleCoordinate: a displaced UE that cannot swap takes a random free LED
// in its set, falling back to an augmenting path.
std::vector<Assignment> generate_neighborhood(const TabuState& state, const ChannelTable& table, Rng& rng,
                                              NeighborhoodKind kind = NeighborhoodKind::SingleCoordinate);

// Objective of every candidate, sorted descending; ties keep the lower index.
std::vector<ScoredCandidate> rank_candidates(std::span<const Assignment> candidates,
                                             const ChannelTable& table, NoiseModel noise);

// First ranked candidate that satisfies aspiration or whose changed links
// (z_m != current_m) all have tabu value zero.
std::optional<ScoredCandidate> select_move(std::span<const ScoredCandidate> ranked, const TabuState& state);

std::optional<ScoredCandidate> select_move(std::span<const Assignment> candidates, const TabuState& state,
                                           const ChannelTable& table, NoiseModel noise);

// current <- accepted; best <- accepted on strict improvement; then the
// tabu list ticks down and the accepted links are set to M.
void commit_move(TabuState& state, const Assignment& accepted, double value);

bool stopping_check(const TabuState& state, const TsConfig& config);

// Deterministic given config.rng_seed. Throws InfeasibleError when the
// instance admits no one-to-one assignment.
TsResult run_tabu_search(const ChannelTable& table, NoiseModel noise, const TsConfig& config);

} // namespace vlcsec
