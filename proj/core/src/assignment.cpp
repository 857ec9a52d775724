#include "vlcsec/assignment.hpp"

#include <algorithm>
#include <sstream>

#include "vlcsec/error.hpp"

namespace vlcsec {

namespace {

// Kuhn's augmenting path from `ue`. owner[k] is the UE holding LED k or -1.
bool augment(const ChannelTable& table, std::size_t ue, std::vector<int>& owner,
             std::vector<char>& visited, std::vector<int>& leds) {
    for (int k : table.reachable_sets[ue]) {
        if (visited[k]) continue;
        visited[k] = 1;
        if (owner[k] < 0 || augment(table, static_cast<std::size_t>(owner[k]), owner, visited, leds)) {
            owner[k] = static_cast<int>(ue);
            leds[ue] = k;
            return true;
        }
    }
    return false;
}

} // namespace

std::string to_string(const Assignment& a) {
    std::ostringstream out;
    out << '[';
    for (std::size_t m = 0; m < a.size(); ++m) out << (m ? "," : "") << a[m];
    out << ']';
    return out.str();
}

bool is_feasible(const ChannelTable& table, const Assignment& a) {
    if (a.size() != table.num_ues()) return false;
    std::vector<char> used(table.num_leds(), 0);
    for (std::size_t m = 0; m < a.size(); ++m) {
        const int k = a[m];
        if (k < 0 || static_cast<std::size_t>(k) >= table.num_leds()) return false;
        if (!(table.gains(k, m) > 0.0) || used[k]) return false;
        used[k] = 1;
    }
    return true;
}

void require_feasible(const ChannelTable& table, const Assignment& a) {
    if (a.size() != table.num_ues())
        throw InfeasibleError("assignment has " + std::to_string(a.size()) + " entries for " +
                              std::to_string(table.num_ues()) + " UEs");
    std::vector<char> used(table.num_leds(), 0);
    for (std::size_t m = 0; m < a.size(); ++m) {
        const int k = a[m];
        if (k < 0 || static_cast<std::size_t>(k) >= table.num_leds())
            throw InfeasibleError("UE " + std::to_string(m) + " assigned to nonexistent LED " +
                                  std::to_string(k));
        if (!(table.gains(k, m) > 0.0))
            throw InfeasibleError("LED " + std::to_string(k) + " is not reachable by UE " +
                                  std::to_string(m));
        if (used[k]) throw InfeasibleError("LED " + std::to_string(k) + " serves more than one UE");
        used[k] = 1;
    }
}

bool has_feasible_assignment(const ChannelTable& table) {
    Assignment empty(std::vector<int>(table.num_ues(), -1));
    return complete_assignment(table, std::move(empty)).has_value();
}

std::optional<Assignment> complete_assignment(const ChannelTable& table, Assignment partial) {
    if (partial.size() != table.num_ues()) return std::nullopt;
    std::vector<int> leds(partial.begin(), partial.end());
    std::vector<int> owner(table.num_leds(), -1);
    for (std::size_t m = 0; m < leds.size(); ++m) {
        const int k = leds[m];
        if (k < 0) continue;
        if (static_cast<std::size_t>(k) >= table.num_leds() || owner[k] >= 0 || !(table.gains(k, m) > 0.0))
            leds[m] = -1;
        else
            owner[k] = static_cast<int>(m);
    }
    for (std::size_t m = 0; m < leds.size(); ++m) {
        if (leds[m] >= 0) continue;
        std::vector<char> visited(table.num_leds(), 0);
        if (!augment(table, m, owner, visited, leds)) return std::nullopt;
    }
    return Assignment(std::move(leds));
}

} // namespace vlcsec
