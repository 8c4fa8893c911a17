#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "sdp/core.hpp"
#include "sdp/rng.hpp"

namespace helpers {

inline sdp::Instance make(int n, std::vector<std::array<int, 2>> edges,
                          std::vector<std::vector<int>> dels, int s, int t,
                          std::optional<int> k = std::nullopt) {
    dels.resize(n + 1);
    sdp::Instance inst;
    inst.graph = sdp::make_graph(n, std::move(edges), std::move(dels));
    inst.s = s;
    inst.t = t;
    inst.max_vertices = k;
    return inst;
}

inline void random_deletions(sdp::Instance& inst, int mu_max, sdp::SplitMix64& rng) {
    auto& g = inst.graph;
    if (g.m() == 0 || mu_max == 0)
        return;
    std::vector<std::vector<int>> dels(g.n + 1);
    for (int v = 1; v <= g.n; ++v) {
        int size = static_cast<int>(rng.below(mu_max + 1));
        std::set<int> chosen;
        while (static_cast<int>(chosen.size()) < size && static_cast<int>(chosen.size()) < g.m())
            chosen.insert(static_cast<int>(rng.below(g.m())) + 1);
        dels[v].assign(chosen.begin(), chosen.end());
    }
    inst.graph = sdp::make_graph(g.n, g.edges, std::move(dels));
}

// random tree plus extra distinct edges; s=1, t=n
inline sdp::Instance random_connected(int n, int extra, int mu_max, sdp::SplitMix64& rng) {
    std::set<std::pair<int, int>> used;
    std::vector<std::array<int, 2>> edges;
    for (int v = 2; v <= n; ++v) {
        int u = static_cast<int>(rng.below(v - 1)) + 1;
        edges.push_back({u, v});
        used.insert({u, v});
    }
    long long all = static_cast<long long>(n) * (n - 1) / 2;
    int want = static_cast<int>(std::min<long long>(extra, all - (n - 1)));
    while (want > 0) {
        int u = static_cast<int>(rng.below(n)) + 1;
        int v = static_cast<int>(rng.below(n)) + 1;
        if (u == v)
            continue;
        if (u > v)
            std::swap(u, v);
        if (!used.insert({u, v}).second)
            continue;
        edges.push_back({u, v});
        --want;
    }
    sdp::Instance inst = make(n, std::move(edges), {}, 1, n);
    random_deletions(inst, mu_max, rng);
    return inst;
}

// chain of bridge/cycle blocks; s = first vertex, t = last cut vertex
inline sdp::Instance random_cactus(int blocks, int mu_max, sdp::SplitMix64& rng) {
    int n = 1;
    int cur = 1;
    std::vector<std::array<int, 2>> edges;
    for (int b = 0; b < blocks; ++b) {
        if (rng.below(2) == 0) {
            int w = ++n;
            edges.push_back({cur, w});
            cur = w;
        } else {
            int len = 3 + static_cast<int>(rng.below(4));   // cycle length 3..6
            int prev = cur;
            std::vector<int> ring;
            for (int i = 0; i < len - 1; ++i) {
                int w = ++n;
                edges.push_back({prev, w});
                ring.push_back(w);
                prev = w;
            }
            edges.push_back({prev, cur});
            cur = ring[rng.below(ring.size())];   // exit somewhere on the cycle
        }
        // occasionally hang a pendant vertex off the route
        if (rng.below(4) == 0) {
            int w = ++n;
            edges.push_back({cur, w});
        }
    }
    sdp::Instance inst = make(n, std::move(edges), {}, 1, cur);
    random_deletions(inst, mu_max, rng);
    return inst;
}

// random f-conforming walk (revisits allowed) of at most max_steps edges
inline std::optional<sdp::PathCertificate> random_conforming_walk(
    const sdp::SelfDeletingGraph& g, int start, int max_steps, sdp::SplitMix64& rng) {
    std::vector<int> del(g.m() + 1, 0);
    sdp::PathCertificate walk;
    walk.vertices.push_back(start);
    for (int e : g.f(start))
        ++del[e];
    int cur = start;
    for (int step = 0; step < max_steps; ++step) {
        std::vector<std::pair<int, int>> options;
        for (auto [w, e] : g.adj[cur])
            if (del[e] == 0)
                options.push_back({w, e});
        if (options.empty())
            break;
        auto [w, e] = options[rng.below(options.size())];
        walk.vertices.push_back(w);
        walk.edge_indices.push_back(e);
        for (int d : g.f(w))
            ++del[d];
        cur = w;
    }
    if (walk.edge_indices.empty())
        return std::nullopt;
    return walk;
}

} // namespace helpers
