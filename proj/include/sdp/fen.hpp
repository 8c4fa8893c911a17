#pragma once

#include <optional>
#include <vector>

#include "sdp/core.hpp"

namespace sdp {

struct ForestSplit {
    std::vector<int> forest_edges;     // ascending edge ids of a deterministic spanning forest
    std::vector<int> feedback_edges;   // complement, ascending; size = m - n + cc(G)
};

// Spanning forest by DFS from vertex 1 (then lowest unvisited vertex),
// exploring neighbors in ascending edge-index order.
ForestSplit feedback_edges(const SelfDeletingGraph& g);

// All simple s-t paths ignoring f, deterministic backtracking order.
// Returns nullopt when the count would exceed cap.
std::optional<std::vector<PathCertificate>> enumerate_st_paths(const SelfDeletingGraph& g,
                                                               int s, int t, long long cap);

// Enumerates the at most 2^fen s-t paths and checks each for conformity.
// Existence: first conforming path wins. With max_vertices set, the full
// enumeration is scanned for a minimum-length conforming path.
SolveOutcome solve_fen(const Instance& inst, int fen_budget = 20);

} // namespace sdp
