#include "sdp/oracle.hpp"

#include <algorithm>
#include <functional>

namespace sdp {

namespace {

// Shared DFS: simple paths from s with deleted-edge reference counts so
// backtracking is O(deg). `on_path` gets every f-conforming s-t path found
// (depth-limited by `bound` vertices) and returns false to stop the search.
struct Search {
    const SelfDeletingGraph& g;
    int s, t;
    int bound;                                 // max vertices on the path
    std::function<bool(const PathCertificate&)> on_path;
    std::function<bool()> keep_going;          // periodic abort hook (may be null)

    std::vector<int> del;                      // per-edge deletion counts
    std::vector<char> visited;
    PathCertificate cur;
    bool stopped = false;
    long long steps = 0;

    Search(const Instance& inst, int bound_)
        : g(inst.graph), s(inst.s), t(inst.t), bound(bound_),
          del(g.m() + 1, 0), visited(g.n + 1, 0) {}

    void run() {
        visited[s] = 1;
        for (int e : g.f(s)) ++del[e];
        cur.vertices.push_back(s);
        if (s == t) {
            if (!on_path(cur)) stopped = true;
            return;
        }
        dfs(s);
    }

    void dfs(int u) {
        if (stopped) return;
        if (keep_going && (++steps & 0x3ff) == 0 && !keep_going()) {
            stopped = true;
            return;
        }
        if (static_cast<int>(cur.vertices.size()) >= bound)
            return;
        for (auto [w, e] : g.adj[u]) {
            if (visited[w] || del[e] > 0)
                continue;
            visited[w] = 1;
            for (int d : g.f(w)) ++del[d];
            cur.vertices.push_back(w);
            cur.edge_indices.push_back(e);
            if (w == t) {
                if (!on_path(cur)) stopped = true;
            } else {
                dfs(w);
            }
            cur.vertices.pop_back();
            cur.edge_indices.pop_back();
            for (int d : g.f(w)) --del[d];
            visited[w] = 0;
            if (stopped) return;
        }
    }
};

} // namespace

std::vector<PathCertificate> oracle_enumerate(const Instance& inst,
                                              std::optional<long long> limit) {
    std::vector<PathCertificate> out;
    if (limit && *limit <= 0)
        return out;
    Search search(inst, inst.graph.n);
    search.on_path = [&](const PathCertificate& p) {
        out.push_back(p);
        return !limit || static_cast<long long>(out.size()) < *limit;
    };
    search.run();
    return out;
}

SolveOutcome oracle_exists(const Instance& inst) {
    SolveOutcome result = SolveOutcome::no();
    Search search(inst, inst.max_vertices ? *inst.max_vertices : inst.graph.n);
    search.on_path = [&](const PathCertificate& p) {
        result = SolveOutcome::yes(p);
        return false;
    };
    search.run();
    return result;
}

SolveOutcome oracle_shortest(const Instance& inst) {
    SolveOutcome best = SolveOutcome::no();
    int bound = inst.max_vertices ? std::min(*inst.max_vertices, inst.graph.n) : inst.graph.n;
    Search search(inst, bound);
    search.on_path = [&](const PathCertificate& p) {
        best = SolveOutcome::yes(p);
        // branch and bound: only strictly shorter paths are interesting now
        search.bound = p.length() - 1;
        return search.bound >= 1;
    };
    search.run();
    return best;
}

SolveOutcome oracle_exists_bounded(const Instance& inst, std::chrono::milliseconds budget) {
    auto deadline = std::chrono::steady_clock::now() + budget;
    SolveOutcome result = SolveOutcome::no();
    Search search(inst, inst.max_vertices ? *inst.max_vertices : inst.graph.n);
    search.on_path = [&](const PathCertificate& p) {
        result = SolveOutcome::yes(p);
        return false;
    };
    search.keep_going = [deadline] { return std::chrono::steady_clock::now() < deadline; };
    search.run();
    if (search.stopped && result.answer == Answer::No)
        return SolveOutcome::inconclusive("oracle time budget exhausted");
    return result;
}

} // namespace sdp
