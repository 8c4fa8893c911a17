#include "sdp/generate.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "sdp/rng.hpp"

namespace sdp {

CnfFormula parse_dimacs(std::istream& in) {
    CnfFormula phi;
    int want_clauses = -1;
    std::string line;
    bool header = false;
    std::vector<int> cur;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            if (!(ls >> p >> fmt >> phi.vars >> want_clauses) || fmt != "cnf")
                throw std::runtime_error("dimacs: bad problem line");
            header = true;
            continue;
        }
        if (!header)
            throw std::runtime_error("dimacs: clause before problem line");
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                phi.clauses.push_back(cur);
                cur.clear();
            } else {
                if (std::abs(lit) > phi.vars)
                    throw std::runtime_error("dimacs: literal out of range");
                cur.push_back(lit);
            }
        }
    }
    if (!header)
        throw std::runtime_error("dimacs: missing problem line");
    if (!cur.empty())
        throw std::runtime_error("dimacs: unterminated clause");
    if (want_clauses >= 0 && static_cast<int>(phi.clauses.size()) != want_clauses)
        throw std::runtime_error("dimacs: clause count mismatch");
    return phi;
}

namespace {

// incremental graph builder with deferred deletion sets
struct Builder {
    int n = 0;
    std::vector<std::array<int, 2>> edges;
    std::map<int, std::vector<int>> dels;     // vertex -> edge ids

    int vertex() { return ++n; }
    int edge(int u, int v) {
        edges.push_back({u, v});
        return static_cast<int>(edges.size());
    }
    Instance finish(int s, int t, std::optional<int> k = std::nullopt) {
        std::vector<std::vector<int>> d(n + 1);
        for (auto& [v, es] : dels)
            d[v] = es;
        Instance inst;
        inst.graph = make_graph(n, std::move(edges), std::move(d));
        inst.s = s;
        inst.t = t;
        inst.max_vertices = k;
        return inst;
    }
};

// a truth-side of a variable gadget: either one vertex carrying the whole
// deletion set, or (split) a path deleting one edge per vertex
struct Chain {
    std::vector<int> verts;
};

Chain make_chain(Builder& b, std::size_t deletions, bool split) {
    Chain c;
    std::size_t len = split ? std::max<std::size_t>(1, deletions) : 1;
    for (std::size_t i = 0; i < len; ++i)
        c.verts.push_back(b.vertex());
    return c;
}

void assign_chain(Builder& b, const Chain& c, std::vector<int> targets, bool split) {
    // one deleted edge per path vertex, ascending edge index
    std::sort(targets.begin(), targets.end());
    if (!split) {
        if (!targets.empty())
            b.dels[c.verts[0]] = targets;
        return;
    }
    for (std::size_t i = 0; i < targets.size(); ++i)
        b.dels[c.verts[i]] = {targets[i]};
}

// wires (prev) - c_1 - ... - c_len - (next), returning first and last edge ids
std::pair<int, int> wire_chain(Builder& b, int prev, const Chain& c, int next) {
    int first = 0, last = 0;
    int at = prev;
    for (int v : c.verts) {
        last = b.edge(at, v);
        if (!first)
            first = last;
        at = v;
    }
    last = b.edge(at, next);
    if (!first)
        first = last;
    return {first, last};
}

} // namespace

Instance from_cnf(const CnfFormula& phi, bool split_deletions) {
    if (phi.vars < 1 || phi.clauses.empty())
        throw std::invalid_argument("from_cnf: need at least one variable and clause");
    for (const auto& c : phi.clauses)
        if (c.empty())
            throw std::invalid_argument("from_cnf: empty clause");
    Builder b;
    int nv = phi.vars;
    int nc = static_cast<int>(phi.clauses.size());

    // occurrences per literal: (clause, column) pairs in clause order
    std::map<int, std::vector<std::pair<int, int>>> occ;
    for (int j = 0; j < nc; ++j)
        for (std::size_t col = 0; col < phi.clauses[j].size(); ++col)
            occ[phi.clauses[j][col]].push_back({j, static_cast<int>(col)});

    // variable gadgets: iota, T-chain, F-chain, o
    std::vector<int> iota_x(nv), o_x(nv);
    std::vector<Chain> T(nv), F(nv);
    for (int i = 0; i < nv; ++i) {
        iota_x[i] = b.vertex();
        T[i] = make_chain(b, occ[-(i + 1)].size(), split_deletions);
        F[i] = make_chain(b, occ[i + 1].size(), split_deletions);
        o_x[i] = b.vertex();
    }
    // clause gadgets: top row then bottom row
    std::vector<std::vector<int>> top(nc), bot(nc);
    for (int j = 0; j < nc; ++j) {
        int w = static_cast<int>(phi.clauses[j].size());
        for (int c = 0; c < w; ++c)
            top[j].push_back(b.vertex());
        for (int c = 0; c < w; ++c)
            bot[j].push_back(b.vertex());
    }

    // edges: per variable the T-side then F-side, then connectors, then grids
    for (int i = 0; i < nv; ++i) {
        wire_chain(b, iota_x[i], T[i], o_x[i]);
        wire_chain(b, iota_x[i], F[i], o_x[i]);
    }
    for (int i = 0; i + 1 < nv; ++i)
        b.edge(o_x[i], iota_x[i + 1]);
    b.edge(o_x[nv - 1], top[0][0]);
    std::vector<std::vector<int>> vert_edge(nc);
    for (int j = 0; j < nc; ++j) {
        int w = static_cast<int>(phi.clauses[j].size());
        for (int c = 0; c + 1 < w; ++c)
            b.edge(top[j][c], top[j][c + 1]);
        for (int c = 0; c + 1 < w; ++c)
            b.edge(bot[j][c], bot[j][c + 1]);
        for (int c = 0; c < w; ++c)
            vert_edge[j].push_back(b.edge(top[j][c], bot[j][c]));
    }
    for (int j = 0; j + 1 < nc; ++j)
        b.edge(bot[j].back(), top[j + 1][0]);

    // T_x deletes the verticals of ~x, F_x those of x
    for (int i = 0; i < nv; ++i) {
        std::vector<int> tneg, tpos;
        for (auto [j, c] : occ[-(i + 1)])
            tneg.push_back(vert_edge[j][c]);
        for (auto [j, c] : occ[i + 1])
            tpos.push_back(vert_edge[j][c]);
        assign_chain(b, T[i], tneg, split_deletions);
        assign_chain(b, F[i], tpos, split_deletions);
    }
    return b.finish(iota_x[0], bot[nc - 1].back());
}

Instance from_multicolored_clique(const ColoredGraph& g, bool split_deletions) {
    int k = static_cast<int>(g.classes.size());
    if (k < 1)
        throw std::invalid_argument("from_multicolored_clique: empty partition");
    std::vector<int> cls(g.n + 1, 0);
    for (int i = 0; i < k; ++i)
        for (int v : g.classes[i]) {
            if (v < 1 || v > g.n || cls[v])
                throw std::invalid_argument("from_multicolored_clique: bad partition");
            cls[v] = i + 1;
        }
    for (int v = 1; v <= g.n; ++v)
        if (!cls[v])
            throw std::invalid_argument("from_multicolored_clique: bad partition");
    std::set<std::pair<int, int>> adj;
    for (auto [u, v] : g.edges) {
        adj.insert({std::min(u, v), std::max(u, v)});
    }
    auto connected = [&](int u, int v) {
        return adj.count({std::min(u, v), std::max(u, v)}) > 0;
    };

    Builder b;
    std::vector<int> guard(k + 1);
    for (int i = 0; i <= k; ++i)
        guard[i] = b.vertex();

    // size of f(y_v): both path-end edges of every non-neighbor in another class
    auto fsize = [&](int v) {
        std::size_t c = 0;
        for (int w = 1; w <= g.n; ++w)
            if (cls[w] != cls[v] && !connected(v, w))
                c += 2;
        return c;
    };
    std::vector<Chain> path(g.n + 1);
    std::vector<int> order;    // scan order: class by class, ascending ids
    for (int i = 0; i < k; ++i) {
        std::vector<int> vs = g.classes[i];
        std::sort(vs.begin(), vs.end());
        for (int v : vs) {
            path[v] = make_chain(b, fsize(v), split_deletions);
            order.push_back(v);
        }
    }
    std::vector<int> first_edge(g.n + 1), last_edge(g.n + 1);
    for (int v : order) {
        auto [fe, le] = wire_chain(b, guard[cls[v] - 1], path[v], guard[cls[v]]);
        first_edge[v] = fe;
        last_edge[v] = le;
    }
    for (int v : order) {
        std::vector<int> targets;
        for (int w = 1; w <= g.n; ++w)
            if (cls[w] != cls[v] && !connected(v, w)) {
                targets.push_back(first_edge[w]);
                targets.push_back(last_edge[w]);
            }
        assign_chain(b, path[v], targets, split_deletions);
    }
    return b.finish(guard[0], guard[k]);
}

Instance from_cubic_independent_set(int n, const std::vector<std::array<int, 2>>& edges,
                                    int k) {
    std::vector<std::vector<int>> nbr(n + 1);
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n || u == v)
            throw std::invalid_argument("from_cubic_independent_set: bad edge");
        nbr[u].push_back(v);
        nbr[v].push_back(u);
    }
    for (int v = 1; v <= n; ++v) {
        if (nbr[v].size() != 3)
            throw std::invalid_argument("from_cubic_independent_set: graph is not cubic");
        std::sort(nbr[v].begin(), nbr[v].end());
    }
    Builder b;
    std::vector<int> J(n + 1);     // shared gadget junctions, J[0] = s, J[n] = t
    for (int i = 0; i <= n; ++i)
        J[i] = b.vertex();
    std::vector<std::array<int, 3>> a(n + 1);
    std::vector<std::array<int, 4>> bb(n + 1);
    for (int i = 1; i <= n; ++i) {
        for (int j = 0; j < 3; ++j)
            a[i][j] = b.vertex();
        for (int j = 0; j < 4; ++j)
            bb[i][j] = b.vertex();
    }
    std::vector<int> short_entry(n + 1);   // edge {J_{i-1}, a_1} of each gadget
    for (int i = 1; i <= n; ++i) {
        short_entry[i] = b.edge(J[i - 1], a[i][0]);
        b.edge(a[i][0], a[i][1]);
        b.edge(a[i][1], a[i][2]);
        b.edge(a[i][2], J[i]);
        b.edge(J[i - 1], bb[i][0]);
        b.edge(bb[i][0], bb[i][1]);
        b.edge(bb[i][1], bb[i][2]);
        b.edge(bb[i][2], bb[i][3]);
        b.edge(bb[i][3], J[i]);
    }
    for (int i = 1; i <= n; ++i)
        for (std::size_t j = 0; j < nbr[i].size(); ++j)
            b.dels[a[i][j]] = {short_entry[nbr[i][j]]};
    // length bound 5n-k edges, i.e. 5n-k+1 vertices
    return b.finish(J[0], J[n], 5 * n - k + 1);
}

Instance random_instance(int n, long long m, int mu_max, std::uint64_t seed) {
    if (n < 2)
        throw std::invalid_argument("random_instance: need n >= 2");
    long long all = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > all)
        throw std::invalid_argument("random_instance: bad edge count");
    SplitMix64 rng(seed);
    // sparse Fisher-Yates over the lexicographic pair ordering
    std::map<long long, long long> moved;
    std::vector<long long> picked;
    for (long long i = 0; i < m; ++i) {
        long long j = i + static_cast<long long>(rng.below(static_cast<std::uint64_t>(all - i)));
        auto at = [&](long long x) {
            auto it = moved.find(x);
            return it == moved.end() ? x : it->second;
        };
        long long vi = at(i), vj = at(j);
        picked.push_back(vj);
        moved[j] = vi;
        moved[i] = vj;
    }
    std::sort(picked.begin(), picked.end());
    auto unrank = [&](long long r) {
        // pairs (u, v), u < v, ordered by u then v
        long long u = 1;
        long long row = n - 1;
        while (r >= row) {
            r -= row;
            ++u;
            --row;
        }
        return std::array<int, 2>{static_cast<int>(u), static_cast<int>(u + 1 + r)};
    };
    std::vector<std::array<int, 2>> es;
    for (long long r : picked)
        es.push_back(unrank(r));

    std::vector<std::vector<int>> dels(n + 1);
    for (int v = 1; v <= n; ++v) {
        long long size = static_cast<long long>(rng.below(static_cast<std::uint64_t>(mu_max + 1)));
        size = std::min(size, m);
        std::set<int> chosen;
        while (static_cast<long long>(chosen.size()) < size)
            chosen.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(m))) + 1);
        dels[v].assign(chosen.begin(), chosen.end());
    }
    Instance inst;
    inst.graph = make_graph(n, std::move(es), std::move(dels));
    inst.s = 1;
    inst.t = n;
    return inst;
}

} // namespace sdp
