#pragma once

#include <optional>
#include <vector>

#include "sdp/core.hpp"

namespace sdp {

// How a reduced vertex expands back: the alternating original path it stands
// for, ordered from its A-end to its B-end. Untouched vertices are singletons.
struct VertexExpansion {
    std::vector<int> orig_vertices;
    std::vector<int> orig_edges;      // size = orig_vertices.size() - 1
};

// A reduced edge: the original edge it carries plus which end (0 = A, 1 = B)
// of each endpoint's expansion it attaches to.
struct EdgeLink {
    int orig_edge = 0;
    int u = 0, v = 0;                 // reduced endpoint ids
    int end_u = 0;
    int end_v = 0;
};

struct RuleRecord {
    int rule = 0;                     // 1 = leaf removal, 2 = chain contraction
    std::vector<int> removed;         // original vertex ids
    int introduced = 0;               // reduced-graph vertex label, 0 for rule 1
};

struct KernelTrace {
    std::vector<RuleRecord> log;
    std::vector<VertexExpansion> expansions;   // 1-based per reduced vertex
    std::vector<EdgeLink> edge_links;          // 1-based per reduced edge
};

struct KernelResult {
    Instance reduced;
    KernelTrace trace;
};

// Single rule applications, mainly for inspection: the instance after one
// leaf removal / one maximal-chain contraction, or nullopt when the rule does
// not apply anywhere.
std::optional<Instance> rule_remove_leaf(const Instance& inst);
std::optional<Instance> rule_contract_chain(const Instance& inst);

// Exhaustive leaf removal and degree-2 chain contraction; the result has at
// most 8*fen+4 vertices and the same answer. Throws std::invalid_argument for
// instances with max_vertices set (contraction changes path lengths).
KernelResult kernelize_fen(const Instance& inst);

// Expands every contracted vertex of a reduced certificate back to its
// original chain, oriented by the traversal direction.
PathCertificate lift_certificate(const KernelTrace& trace, const PathCertificate& cert);

// Instances induced on X^v = {s,t,v} + the endpoints of edges deleted by s,
// one per v != s; each has at most mu+3 vertices and their OR equals the
// original answer. Requires s adjacent to every other vertex.
struct TuringSubinstance {
    Instance instance;
    std::vector<int> vertex_to_orig;
    std::vector<int> edge_to_orig;
};

std::vector<TuringSubinstance> turing_split_universal(const Instance& inst);

// mu+2: a valid path-length bound for existence queries on cliques.
int clique_k_bound(const Instance& inst);

} // namespace sdp
