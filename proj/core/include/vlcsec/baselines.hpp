#pragma once

// Fixed-rule LED selection strategies and the exhaustive-search oracle.
// The strategies visit UEs in index order; an LED already taken by an
// earlier UE is never offered again.

#include <cstdint>
#include <optional>
#include <string_view>

#include "vlcsec/assignment.hpp"
#include "vlcsec/channel_model.hpp"
#include "vlcsec/random.hpp"
#include "vlcsec/rate_engine.hpp"

namespace vlcsec {

enum class StrategyKind { Random, ChannelGain, EveAwareChannelGain, GlobalSearch, TabuSearch };

std::string_view to_string(StrategyKind kind);
std::optional<StrategyKind> parse_strategy(std::string_view name);

// What a strategy does when every LED a UE can reach is already taken.
// Throw raises InfeasibleError; Repair leaves the UE for an augmenting-path
// completion after all other UEs have chosen.
enum class ConflictPolicy { Throw, Repair };

// Uniform pick from B_m minus taken LEDs.
Assignment random_strategy(const ChannelTable& table, Rng& rng, ConflictPolicy policy = ConflictPolicy::Throw);

// Strongest untaken LED in B_m; ties go to the lower LED index.
Assignment channel_gain_strategy(const ChannelTable& table, ConflictPolicy policy = ConflictPolicy::Throw);

// Strongest untaken LED whose UE gain strictly exceeds Eve's gain on it.
// A UE left with no such LED falls back to channel_gain_strategy's rule.
Assignment eve_aware_strategy(const ChannelTable& table, ConflictPolicy policy = ConflictPolicy::Throw);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

struct GlobalSearchResult {
    Assignment best;
    double value = 0.0;
    std::uint64_t evaluations = 0; // feasible vectors scored
};

// Product of |B_m|, saturating at UINT64_MAX.
std::uint64_t enumeration_size(const ChannelTable& table);

// Scores every feasible vector in lexicographic order and keeps the first
// maximizer. Throws EnumerationTooLargeError when prod |B_m| exceeds
// `budget`, InfeasibleError when nothing is feasible.
GlobalSearchResult global_search(const ChannelTable& table, NoiseModel noise,
                                 std::uint64_t budget = kDefaultEnumerationBudget);

} // namespace vlcsec
