#pragma once

#include <vector>

#include "sdp/core.hpp"

namespace sdp {

// Vertices grouped by equal deletion sets; f(v) = sets[type[v] - 1].
struct TypeIndex {
    std::vector<int> type;                  // 1-based vertex -> index in 1..count
    std::vector<std::vector<int>> sets;     // the distinct deletion sets, by first occurrence
    int count = 0;
};

TypeIndex build_type_index(const SelfDeletingGraph& g);

// BFS over states (v, S) where S is the set of deletion types activated so
// far; an edge is traversable iff no activated type deletes it. Exact for both
// existence and minimum path length. Inconclusive when |D(G)| > max_types.
SolveOutcome solve_statespace(const Instance& inst, int max_types = 24);

} // namespace sdp
