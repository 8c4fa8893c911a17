#include "sdp/kernelize.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "sdp/fen.hpp"

namespace sdp {

namespace {

// Mutable working copy of the instance. Vertices and edges keep their working
// ids for their whole life; removed ones are tombstoned and the final graph is
// compacted at the end. Every vertex carries the original path it stands for
// (A-end to B-end) and every edge the original edge it carries plus which end
// of each endpoint's expansion it attaches to.
struct Work {
    struct Vertex {
        bool alive = true;
        VertexExpansion exp;
    };
    struct Edge {
        bool alive = true;
        int u = 0, v = 0;
        int end_u = 0, end_v = 0;
        int orig_edge = 0;
        bool feedback = false;
    };

    std::vector<Vertex> verts;              // 1-based
    std::vector<Edge> edges;                // 1-based
    std::vector<std::set<int>> f;           // current edge ids
    std::vector<std::vector<int>> inc;      // incident edge ids (alive only)
    int s = 0, t = 0;
    std::vector<RuleRecord> log;

    explicit Work(const Instance& inst) {
        const auto& g = inst.graph;
        s = inst.s;
        t = inst.t;
        verts.resize(g.n + 1);
        f.resize(g.n + 1);
        inc.resize(g.n + 1);
        for (int v = 1; v <= g.n; ++v) {
            verts[v].exp.orig_vertices = {v};
            f[v] = std::set<int>(g.f(v).begin(), g.f(v).end());
        }
        edges.resize(g.m() + 1);
        ForestSplit fs = feedback_edges(g);
        std::set<int> fb(fs.feedback_edges.begin(), fs.feedback_edges.end());
        for (int e = 1; e <= g.m(); ++e) {
            edges[e] = {true, g.edges[e - 1][0], g.edges[e - 1][1], 0, 0, e,
                        fb.count(e) > 0};
            inc[edges[e].u].push_back(e);
            inc[edges[e].v].push_back(e);
        }
        // drop components containing neither terminal
        std::vector<char> keep(g.n + 1, 0);
        for (int root : {s, t}) {
            if (root < 1 || root > g.n || keep[root]) continue;
            std::vector<int> stack{root};
            keep[root] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (auto [w, e] : g.adj[u])
                    if (!keep[w]) { keep[w] = 1; stack.push_back(w); }
            }
        }
        for (int v = 1; v <= g.n; ++v)
            if (!keep[v]) {
                verts[v].alive = false;
                f[v].clear();
                for (int e : inc[v])
                    drop_edge(e);
                inc[v].clear();
            }
    }

    int degree(int v) const { return static_cast<int>(inc[v].size()); }

    void drop_edge(int e) {
        if (!edges[e].alive) return;
        edges[e].alive = false;
        for (int x : {edges[e].u, edges[e].v}) {
            auto& lst = inc[x];
            lst.erase(std::remove(lst.begin(), lst.end(), e), lst.end());
        }
    }

    void drop_vertex(int v) {
        verts[v].alive = false;
        f[v].clear();
        for (int e : std::vector<int>(inc[v].begin(), inc[v].end()))
            drop_edge(e);
        inc[v].clear();
    }

    int other_end(int e, int v) const { return edges[e].u == v ? edges[e].v : edges[e].u; }

    int attach_end(int e, int v) const { return edges[e].u == v ? edges[e].end_u : edges[e].end_v; }

    bool rule1_once() {
        for (std::size_t v = 1; v < verts.size(); ++v) {
            if (!verts[v].alive || static_cast<int>(v) == s || static_cast<int>(v) == t)
                continue;
            if (degree(static_cast<int>(v)) != 1)
                continue;
            int e = inc[v][0];
            drop_vertex(static_cast<int>(v));
            for (std::size_t u = 1; u < verts.size(); ++u)
                f[u].erase(e);
            log.push_back({1, verts[v].exp.orig_vertices, 0});
            return true;
        }
        return false;
    }

    bool chain_vertex(int v) const {
        if (!verts[v].alive || v == s || v == t || degree(v) != 2)
            return false;
        for (int e : inc[v])
            if (edges[e].feedback)
                return false;
        return true;
    }

    // is (c_1..c_r) f-conforming against the current deletion sets of the
    // chain vertices themselves (only the chain edges can be affected)
    bool chain_conforming(const std::vector<int>& cv, const std::vector<int>& ce) const {
        std::set<int> banned;
        for (std::size_t i = 0; i < cv.size(); ++i) {
            banned.insert(f[cv[i]].begin(), f[cv[i]].end());
            if (i < ce.size() && banned.count(ce[i]))
                return false;
        }
        return true;
    }

    bool rule2_once() {
        for (std::size_t w0 = 1; w0 < verts.size(); ++w0) {
            int w = static_cast<int>(w0);
            if (!chain_vertex(w))
                continue;
            // grow the maximal chain through w in both directions
            std::vector<int> cv{w};
            std::vector<int> ce;
            bool closed = false;
            for (int dir = 0; dir < 2 && !closed; ++dir) {
                int prev_edge = dir == 0 ? 0 : ce.front();
                int cur = w;
                for (;;) {
                    int step = -1;
                    for (int e : inc[cur])
                        if (e != prev_edge) { step = e; break; }
                    if (step < 0) break;
                    int nxt = other_end(step, cur);
                    if (dir == 0) {
                        ce.push_back(step);
                        cv.push_back(nxt);
                    } else {
                        ce.insert(ce.begin(), step);
                        cv.insert(cv.begin(), nxt);
                    }
                    if (nxt == w) { closed = true; break; }   // full cycle, skip
                    if (!chain_vertex(nxt)) break;
                    prev_edge = step;
                    cur = nxt;
                }
            }
            if (closed || cv.front() == cv.back())
                continue;    // unreachable when fed connected graphs; guarded anyway
            int r = static_cast<int>(cv.size());
            if (r < 4)
                continue;
            apply_contraction(cv, ce);
            return true;
        }
        return false;
    }

    void apply_contraction(const std::vector<int>& cv, const std::vector<int>& ce) {
        int r = static_cast<int>(cv.size());
        bool fwd_ok = chain_conforming(cv, ce);
        std::vector<int> rcv(cv.rbegin(), cv.rend());
        std::vector<int> rce(ce.rbegin(), ce.rend());
        bool bwd_ok = chain_conforming(rcv, rce);

        // stitched expansion of the interior, oriented c_1 -> c_r
        VertexExpansion exp;
        for (int j = 1; j <= r - 2; ++j) {
            int c = cv[j];
            const VertexExpansion& sub = verts[c].exp;
            bool forward = attach_end(ce[j - 1], c) == 0;   // entered at the A-end
            if (j > 1)
                exp.orig_edges.push_back(edges[ce[j - 1]].orig_edge);
            if (forward) {
                exp.orig_vertices.insert(exp.orig_vertices.end(),
                                         sub.orig_vertices.begin(), sub.orig_vertices.end());
                exp.orig_edges.insert(exp.orig_edges.end(),
                                      sub.orig_edges.begin(), sub.orig_edges.end());
            } else {
                exp.orig_vertices.insert(exp.orig_vertices.end(),
                                         sub.orig_vertices.rbegin(), sub.orig_vertices.rend());
                exp.orig_edges.insert(exp.orig_edges.end(),
                                      sub.orig_edges.rbegin(), sub.orig_edges.rend());
            }
        }

        // f(v*): everything the interior deleted except the chain edges
        std::set<int> chain_edges(ce.begin(), ce.end());
        std::set<int> fstar;
        for (int j = 1; j <= r - 2; ++j)
            for (int e : f[cv[j]])
                if (!chain_edges.count(e))
                    fstar.insert(e);

        std::vector<int> removed;
        for (int j = 1; j <= r - 2; ++j) {
            const auto& ov = verts[cv[j]].exp.orig_vertices;
            removed.insert(removed.end(), ov.begin(), ov.end());
        }

        int c1 = cv.front(), cr = cv.back();
        int end_c1 = attach_end(ce.front(), c1);
        int end_cr = attach_end(ce.back(), cr);
        int orig_first = edges[ce.front()].orig_edge;
        int orig_last = edges[ce.back()].orig_edge;

        for (int j = 1; j <= r - 2; ++j)
            drop_vertex(cv[j]);    // also drops all chain edges

        int vstar = static_cast<int>(verts.size());
        verts.push_back({true, std::move(exp)});
        f.push_back({});
        inc.push_back({});

        int eA = static_cast<int>(edges.size());
        edges.push_back({true, c1, vstar, end_c1, 0, orig_first, false});
        inc[c1].push_back(eA);
        inc[vstar].push_back(eA);
        int eB = static_cast<int>(edges.size());
        edges.push_back({true, vstar, cr, 1, end_cr, orig_last, false});
        inc[vstar].push_back(eB);
        inc[cr].push_back(eB);

        // survivors deleting a chain edge now delete both replacement edges
        for (std::size_t u = 1; u < verts.size(); ++u) {
            if (!verts[u].alive) continue;
            bool hit = false;
            for (int e : chain_edges)
                if (f[u].erase(e))
                    hit = true;
            if (hit) {
                f[u].insert(eA);
                f[u].insert(eB);
            }
        }
        f[vstar] = std::move(fstar);
        if (!fwd_ok)
            f[vstar].insert(eB);
        if (!bwd_ok)
            f[vstar].insert(eA);
        log.push_back({2, std::move(removed), vstar});
    }

    KernelResult finish(const Instance& original) const {
        KernelResult out;
        std::vector<int> vmap(verts.size(), 0);
        out.trace.expansions.push_back({});   // 1-based
        int n2 = 0;
        for (std::size_t v = 1; v < verts.size(); ++v)
            if (verts[v].alive) {
                vmap[v] = ++n2;
                out.trace.expansions.push_back(verts[v].exp);
            }
        std::vector<std::array<int, 2>> es;
        std::vector<int> emap(edges.size(), 0);
        out.trace.edge_links.push_back({});
        for (std::size_t e = 1; e < edges.size(); ++e)
            if (edges[e].alive) {
                es.push_back({vmap[edges[e].u], vmap[edges[e].v]});
                emap[e] = static_cast<int>(es.size());
                out.trace.edge_links.push_back({edges[e].orig_edge, vmap[edges[e].u],
                                                vmap[edges[e].v], edges[e].end_u,
                                                edges[e].end_v});
            }
        std::vector<std::vector<int>> dels(n2 + 1);
        for (std::size_t v = 1; v < verts.size(); ++v)
            if (verts[v].alive)
                for (int e : f[v])
                    dels[vmap[v]].push_back(emap[e]);
        out.reduced.graph = make_graph(n2, std::move(es), std::move(dels));
        out.reduced.s = vmap[s];
        out.reduced.t = vmap[t];
        out.trace.log = log;
        (void)original;
        return out;
    }
};

} // namespace

std::optional<Instance> rule_remove_leaf(const Instance& inst) {
    Work w(inst);
    w.log.clear();                    // only interested in a single application
    if (!w.rule1_once())
        return std::nullopt;
    return w.finish(inst).reduced;
}

std::optional<Instance> rule_contract_chain(const Instance& inst) {
    Work w(inst);
    if (!w.rule2_once())
        return std::nullopt;
    return w.finish(inst).reduced;
}

KernelResult kernelize_fen(const Instance& inst) {
    if (inst.max_vertices)
        throw std::invalid_argument(
            "kernelize_fen: chain contraction changes path lengths; "
            "not valid for bounded-length instances");
    Work w(inst);
    for (;;) {
        while (w.rule1_once()) {}
        if (!w.rule2_once())
            break;
    }
    return w.finish(inst);
}

PathCertificate lift_certificate(const KernelTrace& trace, const PathCertificate& cert) {
    PathCertificate out;
    if (cert.vertices.empty())
        return out;
    for (std::size_t i = 0; i < cert.vertices.size(); ++i) {
        int v = cert.vertices[i];
        const VertexExpansion& exp = trace.expansions[v];
        bool forward = true;
        if (exp.orig_vertices.size() > 1) {
            if (i == 0)
                throw std::logic_error("lift_certificate: terminal was contracted");
            // orient by which end of the expansion the entering edge attaches to
            const EdgeLink& l = trace.edge_links[cert.edge_indices[i - 1]];
            int entry_end = l.u == v ? l.end_u : l.end_v;
            forward = entry_end == 0;
        }
        if (i > 0)
            out.edge_indices.push_back(trace.edge_links[cert.edge_indices[i - 1]].orig_edge);
        if (forward) {
            out.vertices.insert(out.vertices.end(),
                                exp.orig_vertices.begin(), exp.orig_vertices.end());
            out.edge_indices.insert(out.edge_indices.end(),
                                    exp.orig_edges.begin(), exp.orig_edges.end());
        } else {
            out.vertices.insert(out.vertices.end(),
                                exp.orig_vertices.rbegin(), exp.orig_vertices.rend());
            out.edge_indices.insert(out.edge_indices.end(),
                                    exp.orig_edges.rbegin(), exp.orig_edges.rend());
        }
    }
    return out;
}

std::vector<TuringSubinstance> turing_split_universal(const Instance& inst) {
    const auto& g = inst.graph;
    if (static_cast<int>(g.adj[inst.s].size()) != g.n - 1)
        throw std::invalid_argument("turing_split_universal: s is not universal");
    // a shortest conforming path can only pass through vertices whose edge to
    // s was deleted by f(s); other interior vertices admit a shortcut from s
    std::set<int> core{inst.s, inst.t};
    for (int e : g.f(inst.s)) {
        auto [a, b] = g.edges[e - 1];
        if (a == inst.s)
            core.insert(b);
        else if (b == inst.s)
            core.insert(a);
    }
    std::vector<TuringSubinstance> out;
    for (int v = 1; v <= g.n; ++v) {
        if (v == inst.s)
            continue;
        std::set<int> keep = core;
        keep.insert(v);
        InducedSubgraph sub =
            induced_subgraph(g, std::vector<int>(keep.begin(), keep.end()));
        TuringSubinstance ti;
        ti.instance.graph = sub.graph;
        ti.instance.s = sub.orig_vertex_to_new[inst.s];
        ti.instance.t = sub.orig_vertex_to_new[inst.t];
        ti.instance.max_vertices = inst.max_vertices;
        ti.vertex_to_orig = sub.vertex_to_orig;
        ti.edge_to_orig = sub.edge_to_orig;
        out.push_back(std::move(ti));
    }
    return out;
}

int clique_k_bound(const Instance& inst) {
    const auto& g = inst.graph;
    for (int v = 1; v <= g.n; ++v)
        if (static_cast<int>(g.adj[v].size()) != g.n - 1)
            throw std::invalid_argument("clique_k_bound: graph is not a clique");
    int mu = 0;
    for (int v = 1; v <= g.n; ++v)
        mu = std::max(mu, static_cast<int>(g.f(v).size()));
    return mu + 2;
}

} // namespace sdp
