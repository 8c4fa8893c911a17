#include "sdp/colorcoding.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <unordered_set>

#include "sdp/rng.hpp"

namespace sdp {

PathClass classify_path(const SelfDeletingGraph& g, const EdgeColoring& chi,
                        const PathCertificate& path) {
    PathClass out;
    const auto& vs = path.vertices;
    const auto& es = path.edge_indices;

    // chi-compliant: chi(e_i) not among the colors deleted by v_1..v_i
    std::set<int> banned;
    out.chi_compliant = true;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (int e : g.f(vs[i]))
            banned.insert(chi.of(e));
        if (i < es.size() && banned.count(chi.of(es[i]))) {
            out.chi_compliant = false;
            break;
        }
    }

    std::set<int> path_edges(es.begin(), es.end());
    std::set<int> path_colors;
    bool injective_on_path = true;
    for (int e : es)
        if (!path_colors.insert(chi.of(e)).second)
            injective_on_path = false;

    std::set<int> union_f;
    for (int v : vs)
        for (int e : g.f(v))
            union_f.insert(e);

    out.half_chi_rainbow = injective_on_path;
    for (int e : union_f)
        if (!path_edges.count(e) && path_colors.count(chi.of(e)))
            out.half_chi_rainbow = false;

    std::set<int> F = union_f;
    F.insert(path_edges.begin(), path_edges.end());
    std::set<int> F_colors;
    out.chi_rainbow = true;
    for (int e : F)
        if (!F_colors.insert(chi.of(e)).second)
            out.chi_rainbow = false;
    return out;
}

namespace {

constexpr int kColorBudget = 64;

SolveOutcome search_impl(const Instance& inst, const EdgeColoring& chi,
                         const std::vector<int>& Q, int k) {
    const auto& g = inst.graph;
    if (k < 1)
        return SolveOutcome::no();
    if (inst.s == inst.t) {
        PathCertificate cert;
        cert.vertices.push_back(inst.s);
        return SolveOutcome::yes(cert);
    }
    std::set<int> allowed(Q.begin(), Q.end());
    // only colors of Q that occur on edges in s's component matter; the rest
    // can never block or serve an edge, so drop them before building masks
    std::vector<char> reach(g.n + 1, 0);
    std::vector<int> stack{inst.s};
    reach[inst.s] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto [w, e] : g.adj[u])
            if (!reach[w]) { reach[w] = 1; stack.push_back(w); }
    }
    std::set<int> live;
    for (int e = 1; e <= g.m(); ++e)
        if (reach[g.edges[e - 1][0]] && allowed.count(chi.of(e)))
            live.insert(chi.of(e));
    if (live.size() > kColorBudget)
        return SolveOutcome::inconclusive("more than " + std::to_string(kColorBudget) +
                                          " live colors");
    std::vector<int> bit_of_color;   // dense remap
    std::uint64_t full = 0;
    std::vector<int> color_bit(chi.q + 1, -1);
    for (int c : live) {
        color_bit[c] = static_cast<int>(bit_of_color.size());
        full |= 1ULL << bit_of_color.size();
        bit_of_color.push_back(c);
    }
    auto fmask = [&](int v) {
        std::uint64_t m = 0;
        for (int e : g.f(v))
            if (color_bit[chi.of(e)] >= 0)
                m |= 1ULL << color_bit[chi.of(e)];
        return m;
    };

    struct State { int v; std::uint64_t mask; int parent; int via_edge; int depth; };
    std::vector<State> states;
    std::vector<std::unordered_set<std::uint64_t>> visited(g.n + 1);
    std::uint64_t m0 = full & ~fmask(inst.s);
    states.push_back({inst.s, m0, -1, 0, 1});
    visited[inst.s].insert(m0);
    std::size_t head = 0;
    int goal = -1;
    while (head < states.size() && goal < 0) {
        State cur = states[head];
        if (cur.depth >= k) { ++head; continue; }
        for (auto [w, e] : g.adj[cur.v]) {
            int cb = color_bit[chi.of(e)];
            if (cb < 0 || !(cur.mask >> cb & 1))
                continue;
            std::uint64_t m2 = cur.mask & ~fmask(w);
            if (!visited[w].insert(m2).second)
                continue;
            states.push_back({w, m2, static_cast<int>(head), e, cur.depth + 1});
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
    // a chi-compliant walk is f-conforming, so this never throws
    return SolveOutcome::yes(shorten_walk(g, walk));
}

} // namespace

SolveOutcome chi_compliant_search(const Instance& inst, const EdgeColoring& chi,
                                  const std::vector<int>& Q, int k) {
    return search_impl(inst, chi, Q, k);
}

SolveOutcome solve_randomized(const Instance& inst, int k, double epsilon, std::uint64_t seed) {
    const auto& g = inst.graph;
    int mu = 0;
    for (int v = 1; v <= g.n; ++v)
        mu = std::max(mu, static_cast<int>(g.f(v).size()));
    mu = std::max(mu, 1);
    int q = 4 * k * mu;
    long long trials =
        static_cast<long long>(std::ceil(std::pow(2.0, k) * std::log(1.0 / epsilon)));
    trials = std::max<long long>(trials, 1);
    std::vector<int> Q(q);
    for (int c = 1; c <= q; ++c)
        Q[c - 1] = c;
    bool budget_hit = false;
    for (long long trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(seed + static_cast<std::uint64_t>(trial));
        EdgeColoring chi;
        chi.q = q;
        chi.color.assign(g.m() + 1, 0);
        for (int e = 1; e <= g.m(); ++e)
            chi.color[e] = static_cast<int>(rng.below(q)) + 1;
        SolveOutcome res = search_impl(inst, chi, Q, k);
        if (res.answer == Answer::Yes)
            return res;
        if (res.answer == Answer::Inconclusive)
            budget_hit = true;
    }
    if (budget_hit)
        return SolveOutcome::inconclusive("color budget exceeded in every trial");
    return SolveOutcome::inconclusive("one-sided: no chi-compliant path in " +
                                      std::to_string(trials) + " trials");
}

EdgeColoring PerfectFamily::member(long long a) const {
    EdgeColoring chi;
    chi.q = static_cast<int>(range);
    chi.color.assign(m + 1, 0);
    for (long long e = 1; e <= m; ++e)
        chi.color[e] = static_cast<int>((a * e % p) % range) + 1;
    return chi;
}

PerfectFamily build_perfect_family(long long m, int q) {
    PerfectFamily fam;
    fam.m = m;
    fam.q = q;
    fam.range = static_cast<long long>(q) * q;
    long long p = std::max(m, fam.range) + 1;
    auto is_prime = [](long long x) {
        if (x < 2) return false;
        for (long long d = 2; d * d <= x; ++d)
            if (x % d == 0) return false;
        return true;
    };
    while (!is_prime(p))
        ++p;
    fam.p = p;
    return fam;
}

SolveOutcome solve_deterministic(const Instance& inst, int k) {
    const auto& g = inst.graph;
    if (inst.s == inst.t) {
        PathCertificate cert;
        cert.vertices.push_back(inst.s);
        return SolveOutcome::yes(cert);
    }
    if (k < 2)
        return SolveOutcome::no();
    int mu = 0;
    for (int v = 1; v <= g.n; ++v)
        mu = std::max(mu, static_cast<int>(g.f(v).size()));
    if (mu == 0) {
        // no deletions: plain BFS within k vertices
        EdgeColoring uni;
        uni.q = 1;
        uni.color.assign(g.m() + 1, 1);
        return search_impl(inst, uni, {1}, k);
    }
    int q = mu * k + k - 1;
    PerfectFamily fam = build_perfect_family(g.m(), q);
    std::vector<int> Q(fam.range);
    for (long long c = 1; c <= fam.range; ++c)
        Q[c - 1] = static_cast<int>(c);
    bool budget_hit = false;
    for (long long a = 1; a < fam.p; ++a) {
        EdgeColoring chi = fam.member(a);
        std::set<int> distinct(chi.color.begin() + 1, chi.color.end());
        bool globally_injective = static_cast<long long>(distinct.size()) == fam.m;
        SolveOutcome res = search_impl(inst, chi, Q, k);
        if (res.answer == Answer::Yes)
            return res;
        if (res.answer == Answer::Inconclusive) {
            budget_hit = true;
            continue;
        }
        // an all-edge-injective coloring makes chi-compliance coincide with
        // f-conformity, so its No settles the instance outright
        if (globally_injective)
            return SolveOutcome::no();
    }
    if (budget_hit)
        return SolveOutcome::inconclusive(
            "color budget exceeded; fall back to another solver");
    return SolveOutcome::no();
}

} // namespace sdp
