#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sdp/core.hpp"

namespace sdp {

struct CnfFormula {
    int vars = 0;
    std::vector<std::vector<int>> clauses;    // signed 1-based variable ids
};

// DIMACS: "p cnf <vars> <clauses>" header, clauses as 0-terminated literals.
CnfFormula parse_dimacs(std::istream& in);

// SAT reduction: one C4 gadget per variable (the truth vertex deletes the
// clause-gadget edges of the opposite literal), one 2x|C| grid per clause,
// all chained from s to t. With split_deletions the truth vertices become
// paths deleting one edge each, so mu <= 1.
Instance from_cnf(const CnfFormula& phi, bool split_deletions = false);

struct ColoredGraph {
    int n = 0;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::vector<int>> classes;    // partition of 1..n
};

// Multicolored-clique reduction: guard chain g_0..g_k with a 2-edge path per
// vertex; y_v deletes the paths of non-neighbors in other classes.
Instance from_multicolored_clique(const ColoredGraph& g, bool split_deletions = false);

// Independent-set reduction from a cubic graph: per vertex a cycle of two
// parallel paths (lengths 5 and 4, the short one deleting the neighbors'
// short-path entry edges), chained; max_vertices = 5n-k+1. Output is a cactus.
Instance from_cubic_independent_set(int n, const std::vector<std::array<int, 2>>& edges, int k);

// Uniform simple graph on m edges plus per-vertex deletion sets of uniform
// size in 0..mu_max; fully determined by seed. s=1, t=n.
Instance random_instance(int n, long long m, int mu_max, std::uint64_t seed);

} // namespace sdp
