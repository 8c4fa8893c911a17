#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdp/core.hpp"

namespace sdp {

struct Block {
    bool is_cycle = false;         // otherwise a bridge
    std::vector<int> edge_ids;
    std::vector<int> vertices;
};

struct BlockCutTree {
    std::vector<Block> blocks;
    std::vector<char> is_cut;      // 1-based per vertex
    bool is_cactus = false;        // every block a bridge or a simple cycle
};

BlockCutTree block_cut_tree(const SelfDeletingGraph& g);

bool is_cactus(const SelfDeletingGraph& g);

// One block on the unique s-t route through the block-cut tree. For cycle
// blocks the two entry-to-exit sides are labeled so that side 0 has the
// smaller key: a side with no internal vertices sorts first, otherwise the
// side with the lower minimum internal vertex id.
struct ChainBlock {
    bool is_cycle = false;
    int entry = 0, exit = 0;           // cut vertices (or s/t at the ends)
    std::vector<int> side_vertices[2]; // internal vertices, entry-to-exit order; [1] unused for bridges
    std::vector<int> side_edges[2];    // edges of each side; bridges use side 0 only
};

struct BlockChain {
    std::vector<ChainBlock> blocks;
};

// nullopt when s and t are in different components. Requires a cactus.
std::optional<BlockChain> extract_chain(const SelfDeletingGraph& g, int s, int t);

// One implication (a => b); variables are identified by the 1-based position
// of their cycle block in the chain, matching the block numbering.
struct Implication {
    int a_var = 0; bool a_pos = true;
    int b_var = 0; bool b_pos = true;
};

struct TwoSatFormula {
    std::vector<int> variables;          // cycle-block positions, ascending
    std::vector<Implication> clauses;
};

std::string format_2sat(const TwoSatFormula& f);

// Implication-graph SCC solver. Returns the assignment (per variable, in
// formula order) or nullopt when unsatisfiable. Unconstrained variables come
// out false.
std::optional<std::vector<std::pair<int, bool>>> solve_2sat(const TwoSatFormula& f);

struct CactusRun {
    SolveOutcome outcome;
    TwoSatFormula formula;
    std::vector<std::pair<int, bool>> assignment;   // empty when unsatisfiable / early No
};

// Full pipeline with the intermediate 2-SAT artifacts exposed for inspection.
CactusRun solve_cactus_detailed(const Instance& inst);

// Linear-time existence solver for cacti; Inconclusive("not a cactus") when
// the underlying graph is not a cactus or max_vertices is set.
SolveOutcome solve_cactus(const Instance& inst);

} // namespace sdp
