#pragma once

#include <vector>

#include "thintree/crossing.hpp"

namespace thintree {

enum class KCycleStatus { Found, None, Inconclusive };

struct KCycleResult {
    KCycleStatus status = KCycleStatus::None;
    std::vector<int> cycle;  ///< indices into the set list, cyclic order (when Found)
};

/// Is seq a cyclically-crossing cut sequence?  Requirements: length >= 3,
/// consecutive sets cross (cyclically), non-neighbors are disjoint, the union
/// leaves some vertex uncovered, and for length 3 each pairwise intersection
/// sticks out of the third set.
bool is_cut_cycle(const std::vector<VertexSet>& sets, const std::vector<int>& seq);

/// Search for any such cycle of length 3..max_len among the given sets
/// (taken literally, in their stored orientation).  Exhausting the node
/// budget before covering the space yields Inconclusive rather than None.
KCycleResult find_short_k_cycle(const std::vector<VertexSet>& sets, int max_len,
                                long long node_budget = 4'000'000);

/// Same search over a component's stored shores.
KCycleResult find_short_k_cycle(const CrossComponent& comp, int max_len,
                                long long node_budget = 4'000'000);

}  // namespace thintree
