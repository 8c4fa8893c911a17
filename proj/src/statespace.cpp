#include "sdp/statespace.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>

namespace sdp {

TypeIndex build_type_index(const SelfDeletingGraph& g) {
    TypeIndex idx;
    idx.type.assign(g.n + 1, 0);
    std::map<std::vector<int>, int> known;
    for (int v = 1; v <= g.n; ++v) {
        auto [it, fresh] = known.insert({g.f(v), idx.count + 1});
        if (fresh) {
            ++idx.count;
            idx.sets.push_back(g.f(v));
        }
        idx.type[v] = it->second;
    }
    return idx;
}

SolveOutcome solve_statespace(const Instance& inst, int max_types) {
    const auto& g = inst.graph;
    if (inst.s == inst.t) {
        PathCertificate cert;
        cert.vertices.push_back(inst.s);
        return SolveOutcome::yes(cert);
    }
    TypeIndex idx = build_type_index(g);
    if (idx.count > max_types)
        return SolveOutcome::inconclusive("state space too large: |D(G)| = " +
                                          std::to_string(idx.count));
    // which activated types delete each edge, as a type bitmask
    std::vector<std::uint64_t> edge_delmask(g.m() + 1, 0);
    for (int i = 0; i < idx.count; ++i)
        for (int e : idx.sets[i])
            edge_delmask[e] |= 1ULL << i;

    struct State { int v; std::uint64_t S; int parent; int via_edge; };
    std::vector<State> states;
    std::unordered_set<std::uint64_t> visited;
    auto key = [&](int v, std::uint64_t S) {
        return S * static_cast<std::uint64_t>(g.n + 1) + static_cast<std::uint64_t>(v);
    };
    std::uint64_t S0 = 1ULL << (idx.type[inst.s] - 1);
    states.push_back({inst.s, S0, -1, 0});
    visited.insert(key(inst.s, S0));
    std::size_t head = 0;
    int goal = -1;
    while (head < states.size() && goal < 0) {
        State cur = states[head];   // copy: states may reallocate
        for (auto [w, e] : g.adj[cur.v]) {
            if (edge_delmask[e] & cur.S)
                continue;
            std::uint64_t S2 = cur.S | (1ULL << (idx.type[w] - 1));
            if (!visited.insert(key(w, S2)).second)
                continue;
            states.push_back({w, S2, static_cast<int>(head), e});
            if (w == inst.t) { goal = static_cast<int>(states.size()) - 1; break; }
        }
        ++head;
    }
    if (goal < 0)
        return SolveOutcome::no();
    PathCertificate walk;
    for (int i = goal; i >= 0; i = states[i].parent) {
        walk.vertices.push_back(states[i].v);
        if (states[i].parent >= 0)
            walk.edge_indices.push_back(states[i].via_edge);
    }
    std::reverse(walk.vertices.begin(), walk.vertices.end());
    std::reverse(walk.edge_indices.begin(), walk.edge_indices.end());
    // the BFS walk may repeat vertices; shortening cannot change its length
    // because the BFS distance already equals the minimum path length
    PathCertificate cert = shorten_walk(g, walk);
    if (inst.max_vertices && cert.length() > *inst.max_vertices)
        return SolveOutcome::no();
    return SolveOutcome::yes(cert);
}

} // namespace sdp
