#include "vlcsec/tabu_solver.hpp"

#include <algorithm>
#include <string>

#include "vlcsec/error.hpp"

namespace vlcsec {

namespace {

constexpr int kRejectionAttempts = 256;

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

void require_solvable(const ChannelTable& table) {
    for (std::size_t m = 0; m < table.num_ues(); ++m) {
        if (table.reachable_sets[m].empty())
            throw InfeasibleError("UE " + std::to_string(m) + " cannot reach any LED");
    }
    if (table.num_ues() > table.num_leds())
        throw InfeasibleError("more UEs than LEDs");
}

} // namespace

TsConfig TsConfig::for_ues(std::size_t num_ues, std::uint64_t seed) {
    const int m = static_cast<int>(std::max<std::size_t>(num_ues, 1));
    return TsConfig{50 * m, m, seed};
}

void validate(const TsConfig& config) {
    check_parameter(config.max_iterations >= 1, "max_iterations must be >= 1");
    check_parameter(config.repetition_threshold >= 1, "repetition_threshold must be >= 1");
}

Assignment random_feasible_assignment(const ChannelTable& table, Rng& rng) {
    require_solvable(table);
    const std::size_t ues = table.num_ues();
    std::vector<int> leds(ues);
    std::vector<char> used(table.num_leds(), 0);

    for (int attempt = 0; attempt < kRejectionAttempts; ++attempt) {
        std::fill(used.begin(), used.end(), 0);
        bool collided = false;
        for (std::size_t m = 0; m < ues && !collided; ++m) {
            leds[m] = pick_uniform(table.reachable_sets[m], rng);
            collided = used[leds[m]];
            used[leds[m]] = 1;
        }
        if (!collided) return Assignment(leds);
    }

    std::fill(used.begin(), used.end(), 0);
    for (std::size_t m = 0; m < ues; ++m) {
        std::vector<int> free;
        for (int k : table.reachable_sets[m]) {
            if (!used[k]) free.push_back(k);
        }
        leds[m] = free.empty() ? -1 : pick_uniform(free, rng);
        if (leds[m] >= 0) used[leds[m]] = 1;
    }
    auto repaired = complete_assignment(table, Assignment(leds));
    if (!repaired) throw InfeasibleError("no one-to-one LED assignment exists");
    return *repaired;
}

TabuState initial_state(const ChannelTable& table, NoiseModel noise, Assignment start) {
    TabuState state;
    state.tabu = TabuMatrix(table.num_leds(), table.num_ues());
    state.current_value = sum_secrecy_rate(table, start, noise);
    state.evaluations = 1;
    state.current = start;
    state.best = std::move(start);
    state.best_value = state.current_value;
    return state;
}

namespace {

Assignment single_coordinate_neighbor(const Assignment& x, std::size_t q, const ChannelTable& table, Rng& rng) {
    const auto& reach = table.reachable_sets[q];
    if (reach.size() <= 1) return x;

    std::uniform_int_distribution<std::size_t> dist(0, reach.size() - 2);
    std::size_t i = dist(rng);
    const auto cur = static_cast<std::size_t>(std::find(reach.begin(), reach.end(), x[q]) - reach.begin());
    if (i >= cur) ++i;
    const int target = reach[i];

    Assignment z = x;
    z[q] = target;
    const auto holder = std::find(x.begin(), x.end(), target);
    if (holder == x.end()) return z;

    const auto j = static_cast<std::size_t>(holder - x.begin());
    if (contains(table.reachable_sets[j], x[q])) {
        z[j] = x[q];
        return z;
    }
    std::vector<int> free;
    for (int k : table.reachable_sets[j]) {
        if (std::find(z.begin(), z.end(), k) == z.end()) free.push_back(k);
    }
    if (!free.empty()) {
        z[j] = pick_uniform(free, rng);
        return z;
    }
    z[j] = -1;
    auto repaired = complete_assignment(table, std::move(z));
    return repaired ? *repaired : x;
}

} // namespace

std::vector<Assignment> generate_neighborhood(const TabuState& state, const ChannelTable& table, Rng& rng,
                                              NeighborhoodKind kind) {
    const std::size_t ues = table.num_ues();
    if (kind == NeighborhoodKind::SingleCoordinate) {
        std::vector<Assignment> neighbors;
        neighbors.reserve(ues);
        for (std::size_t q = 0; q < ues; ++q)
            neighbors.push_back(single_coordinate_neighbor(state.current, q, table, rng));
        return neighbors;
    }

    const Assignment& x = state.current;
    std::vector<Assignment> neighbors;
    neighbors.reserve(ues);

    std::vector<int> alternatives;
    for (std::size_t q = 0; q < ues; ++q) {
        // Independent draw of every coordinate.
        std::vector<int> z(ues);
        for (std::size_t m = 0; m < ues; ++m) {
            const auto& reach = table.reachable_sets[m];
            if (reach.size() <= 1) {
                z[m] = x[m];
                continue;
            }
            std::uniform_int_distribution<std::size_t> dist(0, reach.size() - 2);
            std::size_t i = dist(rng);
            // Skip over the current LED so the draw is uniform on B_m \ {x_m}.
            const auto cur = static_cast<std::size_t>(
                std::find(reach.begin(), reach.end(), x[m]) - reach.begin());
            if (i >= cur) ++i;
            z[m] = reach[i];
        }

        // Frozen coordinates are reserved first; they have nowhere else to go.
        std::vector<int> taken;
        for (std::size_t m = 0; m < ues; ++m) {
            if (table.reachable_sets[m].size() <= 1) taken.push_back(z[m]);
        }
        bool broken = false;
        for (std::size_t m = 0; m < ues; ++m) {
            if (table.reachable_sets[m].size() <= 1) continue;
            if (!contains(taken, z[m])) {
                taken.push_back(z[m]);
                continue;
            }
            alternatives.clear();
            for (int k : table.reachable_sets[m]) {
                if (k != x[m] && !contains(taken, k)) alternatives.push_back(k);
            }
            if (!alternatives.empty()) {
                z[m] = pick_uniform(alternatives, rng);
            } else if (!contains(taken, x[m])) {
                z[m] = x[m];
            } else {
                z[m] = -1;
                broken = true;
                continue;
            }
            taken.push_back(z[m]);
        }

        if (broken) {
            // x itself is a perfect matching, so a completion always exists.
            auto repaired = complete_assignment(table, Assignment(z));
            neighbors.push_back(repaired ? std::move(*repaired) : x);
        } else {
            neighbors.emplace_back(std::move(z));
        }
    }
    return neighbors;
}

std::vector<ScoredCandidate> rank_candidates(std::span<const Assignment> candidates,
                                             const ChannelTable& table, NoiseModel noise) {
    std::vector<ScoredCandidate> ranked;
    ranked.reserve(candidates.size());
    for (std::size_t q = 0; q < candidates.size(); ++q)
        ranked.push_back({candidates[q], sum_secrecy_rate(table, candidates[q], noise), q});
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const ScoredCandidate& a, const ScoredCandidate& b) { return a.value > b.value; });
    return ranked;
}

std::optional<ScoredCandidate> select_move(std::span<const ScoredCandidate> ranked, const TabuState& state) {
    for (const auto& c : ranked) {
        if (c.value > state.best_value) return c;
        bool free = true;
        for (std::size_t m = 0; m < c.assignment.size() && free; ++m) {
            const int led = c.assignment[m];
            free = led == state.current[m] || state.tabu(led, m) == 0;
        }
        if (free) return c;
    }
    return std::nullopt;
}

std::optional<ScoredCandidate> select_move(std::span<const Assignment> candidates, const TabuState& state,
                                           const ChannelTable& table, NoiseModel noise) {
    const auto ranked = rank_candidates(candidates, table, noise);
    return select_move(std::span<const ScoredCandidate>(ranked), state);
}

void commit_move(TabuState& state, const Assignment& accepted, double value) {
    state.current = accepted;
    state.current_value = value;
    if (value > state.best_value) {
        state.best = accepted;
        state.best_value = value;
    }
    state.tabu.decrement();
    const int tenure = static_cast<int>(accepted.size());
    for (std::size_t m = 0; m < accepted.size(); ++m) state.tabu(accepted[m], m) = tenure;
}

bool stopping_check(const TabuState& state, const TsConfig& config) {
    if (state.iteration >= config.max_iterations) return true;
    return state.repetition_count > config.repetition_threshold && state.local_max;
}

TsResult run_tabu_search(const ChannelTable& table, NoiseModel noise, const TsConfig& config) {
    validate(config);
    validate(noise);
    Rng rng(config.rng_seed);

    TabuState state = initial_state(table, noise, random_feasible_assignment(table, rng));
    TsResult result;
    result.trace.push_back({0, state.current_value, state.best_value, state.evaluations});
    result.evaluations_to_best = state.evaluations;

    while (!stopping_check(state, config)) {
        const auto neighbors = generate_neighborhood(state, table, rng, config.neighborhood);
        const auto ranked = rank_candidates(neighbors, table, noise);
        state.evaluations += ranked.size();
        state.local_max = ranked.empty() || !(ranked.front().value > state.current_value);

        const double previous_best = state.best_value;
        if (auto move = select_move(std::span<const ScoredCandidate>(ranked), state)) {
            const bool unchanged = move->assignment == state.current;
            commit_move(state, move->assignment, move->value);
            state.repetition_count = unchanged ? state.repetition_count + 1 : 0;
        } else {
            state.tabu.decrement();
            ++state.repetition_count;
        }
        ++state.iteration;
        if (state.best_value > previous_best) result.evaluations_to_best = state.evaluations;
        result.trace.push_back({state.iteration, state.current_value, state.best_value, state.evaluations});
    }

    result.best = state.best;
    result.best_value = state.best_value;
    result.evaluations = state.evaluations;
    result.iterations = state.iteration;
    return result;
}

} // namespace vlcsec
