#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vlcsec/channel_model.hpp"

namespace vlcsec {

// LED index chosen by each UE, indexed by UE.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(std::vector<int> leds) : leds_(std::move(leds)) {}

    std::size_t size() const { return leds_.size(); }
    bool empty() const { return leds_.empty(); }
    int operator[](std::size_t ue) const { return leds_[ue]; }
    int& operator[](std::size_t ue) { return leds_[ue]; }
    auto begin() const { return leds_.begin(); }
    auto end() const { return leds_.end(); }
    const std::vector<int>& leds() const { return leds_; }

    friend bool operator==(const Assignment&, const Assignment&) = default;
    friend auto operator<=>(const Assignment&, const Assignment&) = default;

private:
    std::vector<int> leds_;
};

std::string to_string(const Assignment& a);

// Every UE holds an LED from its reachable set and no LED serves two UEs.
bool is_feasible(const ChannelTable& table, const Assignment& a);

// Throws InfeasibleError naming the first violated constraint.
void require_feasible(const ChannelTable& table, const Assignment& a);

// Some one-to-one assignment exists (bipartite perfect matching on B_m).
bool has_feasible_assignment(const ChannelTable& table);

// Completes a partial assignment (entries < 0 are unassigned) into a
// feasible one, moving already-assigned UEs only along augmenting paths.
// Returns nullopt when no feasible completion exists.
std::optional<Assignment> complete_assignment(const ChannelTable& table, Assignment partial);

} // namespace vlcsec
