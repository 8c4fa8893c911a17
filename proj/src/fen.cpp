#include "sdp/fen.hpp"

#include <algorithm>
#include <string>

namespace sdp {

ForestSplit feedback_edges(const SelfDeletingGraph& g) {
    ForestSplit out;
    std::vector<char> seen(g.n + 1, 0);
    std::vector<char> in_forest(g.m() + 1, 0);
    // iterative DFS; the explicit stack holds (vertex, next adjacency slot)
    std::vector<std::pair<int, std::size_t>> stack;
    for (int r = 1; r <= g.n; ++r) {
        if (seen[r]) continue;
        seen[r] = 1;
        stack.push_back({r, 0});
        while (!stack.empty()) {
            auto& [u, idx] = stack.back();
            if (idx == g.adj[u].size()) {
                stack.pop_back();
                continue;
            }
            auto [w, e] = g.adj[u][idx++];
            if (!seen[w]) {
                seen[w] = 1;
                in_forest[e] = 1;
                stack.push_back({w, 0});
            }
        }
    }
    for (int e = 1; e <= g.m(); ++e)
        (in_forest[e] ? out.forest_edges : out.feedback_edges).push_back(e);
    return out;
}

namespace {

struct PathEnum {
    const SelfDeletingGraph& g;
    int t;
    long long cap;
    std::vector<PathCertificate>& out;
    std::vector<char> visited;
    PathCertificate cur;
    bool overflow = false;

    PathEnum(const SelfDeletingGraph& g_, int t_, long long cap_,
             std::vector<PathCertificate>& out_)
        : g(g_), t(t_), cap(cap_), out(out_), visited(g_.n + 1, 0) {}

    void dfs(int u) {
        if (overflow) return;
        if (u == t) {
            if (static_cast<long long>(out.size()) >= cap) { overflow = true; return; }
            out.push_back(cur);
            return;
        }
        for (auto [w, e] : g.adj[u]) {
            if (visited[w]) continue;
            visited[w] = 1;
            cur.vertices.push_back(w);
            cur.edge_indices.push_back(e);
            dfs(w);
            cur.vertices.pop_back();
            cur.edge_indices.pop_back();
            visited[w] = 0;
            if (overflow) return;
        }
    }
};

} // namespace

std::optional<std::vector<PathCertificate>> enumerate_st_paths(const SelfDeletingGraph& g,
                                                               int s, int t, long long cap) {
    std::vector<PathCertificate> out;
    PathEnum en(g, t, cap, out);
    en.visited[s] = 1;
    en.cur.vertices.push_back(s);
    en.dfs(s);
    if (en.overflow)
        return std::nullopt;
    return out;
}

SolveOutcome solve_fen(const Instance& inst, int fen_budget) {
    const auto& g = inst.graph;
    int fen = g.m() - g.n + count_components(g);
    if (fen > fen_budget)
        return SolveOutcome::inconclusive("fen " + std::to_string(fen) + " exceeds budget " +
                                          std::to_string(fen_budget));
    long long cap = fen >= 62 ? (1LL << 62) : (1LL << fen);
    auto paths = enumerate_st_paths(g, inst.s, inst.t, cap);
    if (!paths)
        return SolveOutcome::inconclusive("path count exceeded 2^fen, graph rejected");
    const PathCertificate* best = nullptr;
    for (const auto& p : *paths) {
        if (inst.max_vertices && p.length() > *inst.max_vertices)
            continue;
        if (!is_f_conforming(g, p, true).ok())
            continue;
        if (!inst.max_vertices)
            return SolveOutcome::yes(p);    // existence: first hit in enumeration order
        if (!best || p.length() < best->length())
            best = &p;
    }
    if (best)
        return SolveOutcome::yes(*best);
    return SolveOutcome::no();
}

} // namespace sdp
