#include "sdp/cactus.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace sdp {

// ---------------------------------------------------------------- blocks ----

BlockCutTree block_cut_tree(const SelfDeletingGraph& g) {
    BlockCutTree out;
    out.is_cut.assign(g.n + 1, 0);
    std::vector<int> disc(g.n + 1, 0), low(g.n + 1, 0);
    std::vector<int> edge_stack;
    int timer = 0;

    auto emit_block = [&](int until_edge) {
        Block b;
        std::set<int> vs;
        for (;;) {
            int e = edge_stack.back();
            edge_stack.pop_back();
            b.edge_ids.push_back(e);
            vs.insert(g.edges[e - 1][0]);
            vs.insert(g.edges[e - 1][1]);
            if (e == until_edge) break;
        }
        std::reverse(b.edge_ids.begin(), b.edge_ids.end());
        b.vertices.assign(vs.begin(), vs.end());
        b.is_cycle = b.edge_ids.size() > 1;
        out.blocks.push_back(std::move(b));
    };

    // iterative Hopcroft–Tarjan
    struct Frame { int v; int parent_edge; std::size_t idx; };
    std::vector<Frame> stack;
    for (int root = 1; root <= g.n; ++root) {
        if (disc[root]) continue;
        stack.push_back({root, 0, 0});
        disc[root] = low[root] = ++timer;
        int root_children = 0;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            if (fr.idx < g.adj[fr.v].size()) {
                auto [w, e] = g.adj[fr.v][fr.idx++];
                if (e == fr.parent_edge)
                    continue;
                if (!disc[w]) {
                    edge_stack.push_back(e);
                    disc[w] = low[w] = ++timer;
                    stack.push_back({w, e, 0});
                } else if (disc[w] < disc[fr.v]) {
                    edge_stack.push_back(e);
                    low[fr.v] = std::min(low[fr.v], disc[w]);
                }
            } else {
                int v = fr.v;
                int pe = fr.parent_edge;
                stack.pop_back();
                if (stack.empty())
                    break;
                int u = stack.back().v;
                low[u] = std::min(low[u], low[v]);
                if (u == root)
                    ++root_children;
                if (low[v] >= disc[u]) {
                    if (u != root || root_children > 1)
                        out.is_cut[u] = 1;
                    emit_block(pe);
                }
            }
        }
        // root with exactly one child is not a cut vertex; blocks already emitted
    }
    out.is_cactus = true;
    for (const auto& b : out.blocks)
        if (b.edge_ids.size() > 1 && b.edge_ids.size() != b.vertices.size())
            out.is_cactus = false;
    return out;
}

bool is_cactus(const SelfDeletingGraph& g) {
    return block_cut_tree(g).is_cactus;
}

// ----------------------------------------------------------------- chain ----

namespace {

// Orders the edges of a cycle block from `entry` around to `exit`, producing
// the two internally disjoint sides. The block must be a simple cycle.
void split_cycle(const SelfDeletingGraph& g, const Block& b, int entry, int exit,
                 ChainBlock& out) {
    std::map<int, std::vector<std::pair<int, int>>> adj;   // vertex -> (other, edge)
    for (int e : b.edge_ids) {
        auto [u, v] = g.edges[e - 1];
        adj[u].push_back({v, e});
        adj[v].push_back({u, e});
    }
    // walk both directions from entry until exit
    for (int dir = 0; dir < 2; ++dir) {
        int prev_edge = dir == 0 ? 0 : out.side_edges[0].front();
        int cur = entry;
        auto& verts = out.side_vertices[dir];
        auto& edges = out.side_edges[dir];
        while (cur != exit || edges.empty()) {
            auto& nb = adj[cur];
            std::pair<int, int> step{0, 0};
            for (auto cand : nb)
                if (cand.second != prev_edge) { step = cand; break; }
            assert(step.second != 0);
            edges.push_back(step.second);
            prev_edge = step.second;
            cur = step.first;
            if (cur != exit)
                verts.push_back(cur);
        }
        if (entry == exit)   // degenerate; cannot happen on a proper chain
            break;
    }
    // label: a side with no internal vertices first, else lower min internal id
    auto key = [](const std::vector<int>& vs) {
        return vs.empty() ? -1 : *std::min_element(vs.begin(), vs.end());
    };
    if (key(out.side_vertices[1]) < key(out.side_vertices[0])) {
        std::swap(out.side_vertices[0], out.side_vertices[1]);
        std::swap(out.side_edges[0], out.side_edges[1]);
    }
}

} // namespace

std::optional<BlockChain> extract_chain(const SelfDeletingGraph& g, int s, int t) {
    BlockCutTree bct = block_cut_tree(g);
    BlockChain chain;
    if (s == t)
        return chain;

    // block-cut tree as a bipartite graph: block nodes 0..B-1, vertex nodes
    // B..B+n-1; BFS from a block containing s to one containing t
    int B = static_cast<int>(bct.blocks.size());
    std::vector<std::vector<int>> tree(B + g.n + 1);
    for (int b = 0; b < B; ++b)
        for (int v : bct.blocks[b].vertices)
            if (bct.is_cut[v] || v == s || v == t) {
                tree[b].push_back(B + v);
                tree[B + v].push_back(b);
            }
    auto node_of = [&](int v) -> int { return B + v; };
    std::vector<int> parent(tree.size(), -2);
    std::vector<int> queue{node_of(s)};
    parent[node_of(s)] = -1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int u = queue[h];
        for (int w : tree[u])
            if (parent[w] == -2) {
                parent[w] = u;
                queue.push_back(w);
            }
    }
    if (parent[node_of(t)] == -2)
        return std::nullopt;
    std::vector<int> route;   // block indices from s to t
    for (int u = node_of(t); u != -1; u = parent[u])
        if (u < B)
            route.push_back(u);
    std::reverse(route.begin(), route.end());

    int entry = s;
    for (std::size_t i = 0; i < route.size(); ++i) {
        const Block& b = bct.blocks[route[i]];
        int exit;
        if (i + 1 < route.size()) {
            // the cut vertex shared with the next route block
            int cut_node = parent[route[i + 1]] >= B ? parent[route[i + 1]] : -1;
            // parent chain alternates block/vertex, so this is always a vertex node
            assert(cut_node >= B);
            exit = cut_node - B;
        } else {
            exit = t;
        }
        ChainBlock cb;
        cb.entry = entry;
        cb.exit = exit;
        cb.is_cycle = b.is_cycle;
        if (b.is_cycle) {
            split_cycle(g, b, entry, exit, cb);
        } else {
            cb.side_edges[0].push_back(b.edge_ids[0]);
        }
        chain.blocks.push_back(std::move(cb));
        entry = exit;
    }
    return chain;
}

// ----------------------------------------------------------------- 2-SAT ----

std::string format_2sat(const TwoSatFormula& f) {
    std::string out;
    for (const auto& c : f.clauses) {
        if (!out.empty()) out += " & ";
        out += "(";
        out += (c.a_pos ? "x" : "!x") + std::to_string(c.a_var);
        out += " => ";
        out += (c.b_pos ? "x" : "!x") + std::to_string(c.b_var);
        out += ")";
    }
    return out;
}

std::optional<std::vector<std::pair<int, bool>>> solve_2sat(const TwoSatFormula& f) {
    int nv = static_cast<int>(f.variables.size());
    std::map<int, int> var_index;
    for (int i = 0; i < nv; ++i)
        var_index[f.variables[i]] = i;
    // node 2i = !x_i, node 2i+1 = x_i
    auto node = [&](int var, bool pos) { return 2 * var_index.at(var) + (pos ? 1 : 0); };
    std::vector<std::vector<int>> adj(2 * nv);
    for (const auto& c : f.clauses) {
        adj[node(c.a_var, c.a_pos)].push_back(node(c.b_var, c.b_pos));
        adj[node(c.b_var, !c.b_pos)].push_back(node(c.a_var, !c.a_pos));
    }
    // iterative Tarjan SCC, nodes visited in ascending order
    int N = 2 * nv, timer = 0, ncomp = 0;
    std::vector<int> disc(N, -1), low(N, 0), comp(N, -1), scc_stack;
    std::vector<char> on_stack(N, 0);
    struct Frame { int v; std::size_t idx; };
    std::vector<Frame> stack;
    for (int r = 0; r < N; ++r) {
        if (disc[r] != -1) continue;
        stack.push_back({r, 0});
        disc[r] = low[r] = timer++;
        scc_stack.push_back(r);
        on_stack[r] = 1;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            if (fr.idx < adj[fr.v].size()) {
                int w = adj[fr.v][fr.idx++];
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    scc_stack.push_back(w);
                    on_stack[w] = 1;
                    stack.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[fr.v] = std::min(low[fr.v], disc[w]);
                }
            } else {
                int v = fr.v;
                stack.pop_back();
                if (low[v] == disc[v]) {
                    for (;;) {
                        int w = scc_stack.back();
                        scc_stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = ncomp;
                        if (w == v) break;
                    }
                    ++ncomp;
                }
                if (!stack.empty())
                    low[stack.back().v] = std::min(low[stack.back().v], low[v]);
            }
        }
    }
    std::vector<std::pair<int, bool>> assignment;
    for (int i = 0; i < nv; ++i) {
        if (comp[2 * i] == comp[2 * i + 1])
            return std::nullopt;
        assignment.push_back({f.variables[i], comp[2 * i + 1] < comp[2 * i]});
    }
    return assignment;
}

// ---------------------------------------------------------------- solver ----

namespace {

// Position of each chain vertex in the partial order: cut vertices carry the
// index i of v_{i,i+1} (s = 0), internal vertices their (block, side, pos).
struct ChainPos {
    bool cut = false;
    int cut_index = 0;
    int block = 0;     // 1-based chain position
    int side = 0;
    int pos = 0;
};

struct ChainContext {
    const BlockChain& chain;
    std::map<int, ChainPos> vpos;
    std::map<int, std::pair<int, int>> epos;   // chain edge -> (block, side)

    explicit ChainContext(const BlockChain& c) : chain(c) {
        int k = static_cast<int>(c.blocks.size());
        for (int i = 1; i <= k; ++i) {
            const ChainBlock& b = c.blocks[i - 1];
            vpos[b.entry] = {true, i - 1, 0, 0, 0};
            vpos[b.exit] = {true, i, 0, 0, 0};
            for (int side = 0; side < 2; ++side) {
                for (std::size_t p = 0; p < b.side_vertices[side].size(); ++p)
                    vpos[b.side_vertices[side][p]] =
                        {false, 0, i, side, static_cast<int>(p)};
                for (int e : b.side_edges[side])
                    epos[e] = {i, side};
            }
        }
    }

    bool leq(const ChainPos& a, const ChainPos& b) const {
        if (a.cut && b.cut) return a.cut_index <= b.cut_index;
        if (a.cut) return a.cut_index <= b.block - 1;
        if (b.cut) return a.block <= b.cut_index;
        if (a.block != b.block) return a.block < b.block;
        return a.side == b.side && a.pos <= b.pos;
    }

    // e >= v: both endpoints of e are successors of v in the chain order
    bool edge_geq(const SelfDeletingGraph& g, int e, const ChainPos& v) const {
        auto [x, y] = g.edges[e - 1];
        auto ix = vpos.find(x), iy = vpos.find(y);
        if (ix == vpos.end() || iy == vpos.end())
            return false;
        return leq(v, ix->second) && leq(v, iy->second);
    }
};

} // namespace

CactusRun solve_cactus_detailed(const Instance& inst) {
    CactusRun run;
    const auto& g = inst.graph;
    if (inst.max_vertices) {
        run.outcome = SolveOutcome::inconclusive(
            "cactus solver answers existence only, not the shortest variant");
        return run;
    }
    if (inst.s == inst.t) {
        PathCertificate cert;
        cert.vertices.push_back(inst.s);
        run.outcome = SolveOutcome::yes(cert);
        return run;
    }
    auto maybe_chain = extract_chain(g, inst.s, inst.t);
    if (!maybe_chain) {
        run.outcome = SolveOutcome::no();
        return run;
    }
    const BlockChain& chain = *maybe_chain;
    ChainContext ctx(chain);
    int k = static_cast<int>(chain.blocks.size());

    // effective deletions after the partial-order filter: per chain vertex,
    // the surviving (block, side) cycle targets and bridge targets
    std::vector<std::vector<char>> side_dead(k + 1, std::vector<char>(2, 0));
    bool no = false;

    auto kill_side = [&](int block, int side) {
        side_dead[block][side] = 1;
        const ChainBlock& b = chain.blocks[block - 1];
        if (!b.is_cycle || (side_dead[block][0] && side_dead[block][1]))
            no = true;
    };

    // Claim 2: anything a cut vertex still deletes is inevitably deleted
    for (int i = 0; i <= k && !no; ++i) {
        int cut = i == 0 ? inst.s : chain.blocks[i - 1].exit;
        ChainPos cp = ctx.vpos.at(cut);
        for (int e : g.f(cut)) {
            if (!ctx.edge_geq(g, e, cp)) continue;     // Claim 1 filter
            auto it = ctx.epos.find(e);
            if (it == ctx.epos.end()) continue;        // edge off the chain
            auto [blk, side] = it->second;
            if (!chain.blocks[blk - 1].is_cycle)
                no = true;                             // a bridge dies
            else
                kill_side(blk, side);
        }
    }

    // Claim 3: an internal vertex deleting a (surviving) bridge is unusable
    for (int i = 1; i <= k && !no; ++i) {
        const ChainBlock& b = chain.blocks[i - 1];
        for (int side = 0; side < 2 && !no; ++side)
            for (int v : b.side_vertices[side]) {
                ChainPos vp = ctx.vpos.at(v);
                for (int e : g.f(v)) {
                    if (!ctx.edge_geq(g, e, vp)) continue;
                    auto it = ctx.epos.find(e);
                    if (it == ctx.epos.end()) continue;
                    if (!chain.blocks[it->second.first - 1].is_cycle) {
                        kill_side(i, side);
                        break;
                    }
                }
            }
    }

    if (no) {
        run.outcome = SolveOutcome::no();
        return run;
    }

    // build the 2-SAT formula; x_i true means block i uses its first side
    for (int i = 1; i <= k; ++i)
        if (chain.blocks[i - 1].is_cycle)
            run.formula.variables.push_back(i);
    for (int i = 1; i <= k; ++i) {
        if (!chain.blocks[i - 1].is_cycle) continue;
        for (int side = 0; side < 2; ++side)
            if (side_dead[i][side])
                run.formula.clauses.push_back({i, side == 0, i, side != 0});
    }
    for (int i = 1; i <= k; ++i) {
        const ChainBlock& b = chain.blocks[i - 1];
        if (!b.is_cycle) continue;
        for (int side = 0; side < 2; ++side)
            for (int v : b.side_vertices[side]) {
                ChainPos vp = ctx.vpos.at(v);
                for (int j = i; j <= k; ++j) {
                    if (!chain.blocks[j - 1].is_cycle) continue;
                    bool hit[2] = {false, false};
                    for (int e : g.f(v)) {
                        if (!ctx.edge_geq(g, e, vp)) continue;
                        auto it = ctx.epos.find(e);
                        if (it != ctx.epos.end() && it->second.first == j)
                            hit[it->second.second] = true;
                    }
                    if (hit[0])
                        run.formula.clauses.push_back({i, side == 0, j, false});
                    if (hit[1])
                        run.formula.clauses.push_back({i, side == 0, j, true});
                }
            }
    }

    auto assignment = solve_2sat(run.formula);
    if (!assignment) {
        run.outcome = SolveOutcome::no();
        return run;
    }
    run.assignment = *assignment;
    std::map<int, bool> choice;
    for (auto [var, val] : *assignment)
        choice[var] = val;

    PathCertificate cert;
    cert.vertices.push_back(inst.s);
    for (int i = 1; i <= k; ++i) {
        const ChainBlock& b = chain.blocks[i - 1];
        int side = 0;
        if (b.is_cycle)
            side = choice.at(i) ? 0 : 1;
        for (std::size_t p = 0; p < b.side_edges[side].size(); ++p) {
            cert.edge_indices.push_back(b.side_edges[side][p]);
            cert.vertices.push_back(p + 1 < b.side_edges[side].size()
                                        ? b.side_vertices[side][p]
                                        : b.exit);
        }
    }
    auto check = is_f_conforming(g, cert, true);
    assert(check.ok() && "cactus reconstruction must verify");
    if (!check.ok()) {
        run.outcome = SolveOutcome::inconclusive("internal error: reconstruction failed");
        return run;
    }
    run.outcome = SolveOutcome::yes(cert);
    return run;
}

SolveOutcome solve_cactus(const Instance& inst) {
    if (!is_cactus(inst.graph))
        return SolveOutcome::inconclusive("not a cactus");
    return solve_cactus_detailed(inst).outcome;
}

} // namespace sdp
