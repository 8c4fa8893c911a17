#include "sdp/core.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "sdp/cactus.hpp"
#include "sdp/fen.hpp"

namespace sdp {

SelfDeletingGraph make_graph(int n,
                             std::vector<std::array<int, 2>> edges,
                             std::vector<std::vector<int>> deletions) {
    SelfDeletingGraph g;
    g.n = n;
    g.edges = std::move(edges);
    g.deletions.resize(n + 1);
    for (std::size_t v = 0; v < deletions.size() && v <= static_cast<std::size_t>(n); ++v) {
        auto& d = deletions[v];
        std::sort(d.begin(), d.end());
        d.erase(std::unique(d.begin(), d.end()), d.end());
        g.deletions[v] = std::move(d);
    }
    g.adj.assign(n + 1, {});
    for (int e = 1; e <= g.m(); ++e) {
        auto [u, v] = g.edges[e - 1];
        if (u >= 1 && u <= n && v >= 1 && v <= n) {
            g.adj[u].push_back({v, e});
            g.adj[v].push_back({u, e});
        }
    }
    return g;
}

std::vector<std::string> validate(const SelfDeletingGraph& g) {
    std::vector<std::string> errors;
    std::set<std::pair<int, int>> seen;
    for (int e = 1; e <= g.m(); ++e) {
        auto [u, v] = g.edges[e - 1];
        if (u < 1 || u > g.n || v < 1 || v > g.n) {
            errors.push_back("edge " + std::to_string(e) + ": endpoint out of range");
            continue;
        }
        if (u == v) {
            errors.push_back("edge " + std::to_string(e) + ": self-loop");
            continue;
        }
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            errors.push_back("edge " + std::to_string(e) + ": duplicate edge");
    }
    for (int v = 1; v <= g.n; ++v)
        for (int e : g.f(v))
            if (e < 1 || e > g.m())
                errors.push_back("f(" + std::to_string(v) +
                                 "): deletion references missing edge " + std::to_string(e));
    return errors;
}

ConformityCheck is_f_conforming(const SelfDeletingGraph& g,
                                const PathCertificate& walk,
                                bool require_simple) {
    ConformityCheck res;
    auto structural = [&](const std::string& why) {
        res.defect = WalkDefect::Structural;
        res.detail = why;
        return res;
    };
    const auto& vs = walk.vertices;
    const auto& es = walk.edge_indices;
    if (vs.empty())
        return structural("empty walk");
    if (es.size() + 1 != vs.size())
        return structural("edge count does not match vertex count");
    for (int v : vs)
        if (v < 1 || v > g.n)
            return structural("vertex " + std::to_string(v) + " out of range");
    for (std::size_t i = 0; i < es.size(); ++i) {
        int e = es[i];
        if (e < 1 || e > g.m())
            return structural("edge index " + std::to_string(e) + " out of range");
        auto [a, b] = g.edges[e - 1];
        if (!((a == vs[i] && b == vs[i + 1]) || (b == vs[i] && a == vs[i + 1])))
            return structural("edge " + std::to_string(e) + " does not join positions " +
                              std::to_string(i + 1) + "," + std::to_string(i + 2));
    }
    if (require_simple) {
        std::set<int> uniq(vs.begin(), vs.end());
        if (uniq.size() != vs.size())
            return structural("repeated vertex in a path certificate");
    }
    // e_i must avoid f(v_j) for all j <= i; count how many visited vertices
    // delete each edge so the check is a lookup.
    std::vector<int> deleted(g.m() + 1, 0);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (int e : g.f(vs[i]))
            ++deleted[e];
        if (i < es.size() && deleted[es[i]] > 0) {
            res.defect = WalkDefect::Conformity;
            res.detail = "edge " + std::to_string(es[i]) + " at step " + std::to_string(i + 1) +
                         " was deleted by an earlier vertex";
            return res;
        }
    }
    return res;
}

PathCertificate shorten_walk(const SelfDeletingGraph& g, const PathCertificate& walk) {
    if (!is_f_conforming(g, walk).ok())
        throw std::invalid_argument("shorten_walk: input walk is not f-conforming");
    PathCertificate cur = walk;
    for (;;) {
        std::map<int, std::size_t> first_at;
        std::size_t i = 0, j = 0;
        bool found = false;
        for (std::size_t p = 0; p < cur.vertices.size(); ++p) {
            auto [it, fresh] = first_at.insert({cur.vertices[p], p});
            if (!fresh) { i = it->second; j = p; found = true; break; }
        }
        if (!found)
            return cur;
        // excise the loop between the two occurrences
        cur.vertices.erase(cur.vertices.begin() + i, cur.vertices.begin() + j);
        cur.edge_indices.erase(cur.edge_indices.begin() + i, cur.edge_indices.begin() + j);
    }
}

int count_components(const SelfDeletingGraph& g) {
    std::vector<char> seen(g.n + 1, 0);
    int cc = 0;
    std::vector<int> stack;
    for (int v = 1; v <= g.n; ++v) {
        if (seen[v]) continue;
        ++cc;
        stack.push_back(v);
        seen[v] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [w, e] : g.adj[u])
                if (!seen[w]) { seen[w] = 1; stack.push_back(w); }
        }
    }
    return cc;
}

InstanceStats stats(const SelfDeletingGraph& g, int s, int t) {
    InstanceStats st;
    st.n = g.n;
    st.m = g.m();
    std::set<std::vector<int>> distinct;
    for (int v = 1; v <= g.n; ++v) {
        st.mu = std::max(st.mu, static_cast<int>(g.f(v).size()));
        st.total_f += static_cast<long long>(g.f(v).size());
        distinct.insert(g.f(v));
    }
    st.distinct_deletion_sets = static_cast<int>(distinct.size());
    st.fen = st.m - st.n + count_components(g);
    st.is_cactus = is_cactus(g);
    st.universal_source =
        s >= 1 && s <= g.n && static_cast<int>(g.adj[s].size()) == g.n - 1;
    st.connected = count_components(g) == 1;
    (void)t;
    return st;
}

InducedSubgraph induced_subgraph(const SelfDeletingGraph& g, const std::vector<int>& vertices) {
    InducedSubgraph out;
    out.orig_vertex_to_new.assign(g.n + 1, 0);
    out.vertex_to_orig.push_back(0);   // 1-based
    for (int v : vertices) {
        out.vertex_to_orig.push_back(v);
        out.orig_vertex_to_new[v] = static_cast<int>(out.vertex_to_orig.size()) - 1;
    }
    std::vector<std::array<int, 2>> edges;
    std::vector<int> edge_new(g.m() + 1, 0);
    out.edge_to_orig.push_back(0);
    for (int e = 1; e <= g.m(); ++e) {
        int u = out.orig_vertex_to_new[g.edges[e - 1][0]];
        int v = out.orig_vertex_to_new[g.edges[e - 1][1]];
        if (u && v) {
            edges.push_back({u, v});
            out.edge_to_orig.push_back(e);
            edge_new[e] = static_cast<int>(edges.size());
        }
    }
    std::vector<std::vector<int>> dels(vertices.size() + 1);
    for (std::size_t i = 1; i <= vertices.size(); ++i)
        for (int e : g.f(out.vertex_to_orig[i]))
            if (edge_new[e])
                dels[i].push_back(edge_new[e]);
    out.graph = make_graph(static_cast<int>(vertices.size()), std::move(edges), std::move(dels));
    return out;
}

} // namespace sdp
