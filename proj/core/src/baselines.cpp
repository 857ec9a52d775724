#include "vlcsec/baselines.hpp"

#include <array>
#include <limits>
#include <string>
#include <utility>

#include "vlcsec/error.hpp"

namespace vlcsec {

namespace {

constexpr std::array<std::pair<StrategyKind, std::string_view>, 5> kNames{{
    {StrategyKind::Random, "Random"},
    {StrategyKind::ChannelGain, "ChannelGain"},
    {StrategyKind::EveAwareChannelGain, "EveAwareChannelGain"},
    {StrategyKind::GlobalSearch, "GlobalSearch"},
    {StrategyKind::TabuSearch, "TabuSearch"},
}};

[[noreturn]] void exhausted(std::size_t ue) {
    throw InfeasibleError("every LED reachable by UE " + std::to_string(ue) + " is already taken");
}

// Marks `ue` unassigned under Repair, throws under Throw.
void on_exhausted(std::size_t ue, ConflictPolicy policy, bool& pending) {
    if (policy == ConflictPolicy::Throw) exhausted(ue);
    pending = true;
}

Assignment finish(const ChannelTable& table, std::vector<int> leds, bool pending) {
    if (!pending) return Assignment(std::move(leds));
    auto done = complete_assignment(table, Assignment(std::move(leds)));
    if (!done) throw InfeasibleError("no one-to-one LED assignment exists");
    return *done;
}

// Highest-gain LED in B_m passing `allowed`, or -1.
template <class Pred>
int strongest(const ChannelTable& table, std::size_t ue, Pred allowed) {
    int best = -1;
    for (int k : table.reachable_sets[ue]) {
        if (!allowed(k)) continue;
        if (best < 0 || table.gains(k, ue) > table.gains(best, ue)) best = k;
    }
    return best;
}

} // namespace

std::string_view to_string(StrategyKind kind) {
    for (const auto& [k, name] : kNames) {
        if (k == kind) return name;
    }
    return "Unknown";
}

std::optional<StrategyKind> parse_strategy(std::string_view name) {
    for (const auto& [k, n] : kNames) {
        if (n == name) return k;
    }
    return std::nullopt;
}

Assignment random_strategy(const ChannelTable& table, Rng& rng, ConflictPolicy policy) {
    std::vector<char> taken(table.num_leds(), 0);
    std::vector<int> leds(table.num_ues(), -1);
    std::vector<int> free;
    bool pending = false;
    for (std::size_t m = 0; m < table.num_ues(); ++m) {
        free.clear();
        for (int k : table.reachable_sets[m]) {
            if (!taken[k]) free.push_back(k);
        }
        if (free.empty()) {
            on_exhausted(m, policy, pending);
            continue;
        }
        leds[m] = pick_uniform(free, rng);
        taken[leds[m]] = 1;
    }
    return finish(table, std::move(leds), pending);
}

Assignment channel_gain_strategy(const ChannelTable& table, ConflictPolicy policy) {
    std::vector<char> taken(table.num_leds(), 0);
    std::vector<int> leds(table.num_ues(), -1);
    bool pending = false;
    for (std::size_t m = 0; m < table.num_ues(); ++m) {
        leds[m] = strongest(table, m, [&](int k) { return !taken[k]; });
        if (leds[m] < 0) {
            on_exhausted(m, policy, pending);
            continue;
        }
        taken[leds[m]] = 1;
    }
    return finish(table, std::move(leds), pending);
}

Assignment eve_aware_strategy(const ChannelTable& table, ConflictPolicy policy) {
    std::vector<char> taken(table.num_leds(), 0);
    std::vector<int> leds(table.num_ues(), -1);
    bool pending = false;
    for (std::size_t m = 0; m < table.num_ues(); ++m) {
        leds[m] = strongest(table, m, [&](int k) { return !taken[k] && table.gains(k, m) > table.eve_gains[k]; });
        if (leds[m] < 0) leds[m] = strongest(table, m, [&](int k) { return !taken[k]; });
        if (leds[m] < 0) {
            on_exhausted(m, policy, pending);
            continue;
        }
        taken[leds[m]] = 1;
    }
    return finish(table, std::move(leds), pending);
}

std::uint64_t enumeration_size(const ChannelTable& table) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t size = 1;
    for (const auto& reach : table.reachable_sets) {
        const std::uint64_t n = reach.size();
        if (n == 0) return 0;
        if (size > kMax / n) return kMax;
        size *= n;
    }
    return size;
}

GlobalSearchResult global_search(const ChannelTable& table, NoiseModel noise, std::uint64_t budget) {
    validate(noise);
    const std::uint64_t size = enumeration_size(table);
    if (size > budget)
        throw EnumerationTooLargeError("exhaustive search needs " + std::to_string(size) +
                                       " vectors, budget is " + std::to_string(budget));
    const std::size_t ues = table.num_ues();
    GlobalSearchResult result;
    if (size == 0) throw InfeasibleError("some UE cannot reach any LED");

    // Odometer over B_1 x ... x B_M, last UE fastest.
    std::vector<std::size_t> digit(ues, 0);
    std::vector<int> leds(ues);
    std::vector<int> use_count(table.num_leds(), 0);
    bool found = false;
    while (true) {
        int collisions = 0;
        for (std::size_t m = 0; m < ues; ++m) {
            leds[m] = table.reachable_sets[m][digit[m]];
            if (use_count[leds[m]]++ > 0) ++collisions;
        }
        for (std::size_t m = 0; m < ues; ++m) --use_count[leds[m]];

        if (collisions == 0) {
            Assignment candidate(leds);
            const double value = sum_secrecy_rate(table, candidate, noise);
            ++result.evaluations;
            if (!found || value > result.value) {
                result.best = std::move(candidate);
                result.value = value;
                found = true;
            }
        }

        std::size_t m = ues;
        while (m > 0) {
            --m;
            if (++digit[m] < table.reachable_sets[m].size()) break;
            digit[m] = 0;
            if (m == 0) {
                m = ues; // wrapped around
                break;
            }
        }
        if (ues == 0 || (m == ues)) break;
    }
    if (!found) throw InfeasibleError("no one-to-one LED assignment exists");
    return result;
}

} // namespace vlcsec
