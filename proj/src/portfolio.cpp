#include "sdp/portfolio.hpp"

#include <algorithm>
#include <chrono>

#include "sdp/cactus.hpp"
#include "sdp/colorcoding.hpp"
#include "sdp/fen.hpp"
#include "sdp/kernelize.hpp"
#include "sdp/oracle.hpp"
#include "sdp/statespace.hpp"

namespace sdp {

namespace {

bool certificate_ok(const Instance& inst, const SolveOutcome& out) {
    if (out.answer != Answer::Yes)
        return true;
    if (!out.certificate)
        return false;
    const PathCertificate& c = *out.certificate;
    if (c.vertices.empty() || c.vertices.front() != inst.s || c.vertices.back() != inst.t)
        return false;
    if (inst.max_vertices && c.length() > *inst.max_vertices)
        return false;
    return is_f_conforming(inst.graph, c, true).ok();
}

// accept a strategy's result if it is decisive and (for Yes) re-verifies
bool settle(const Instance& inst, SolveOutcome out, const char* name,
            PortfolioResult& res) {
    if (out.answer == Answer::Inconclusive) {
        res.notes.push_back(std::string(name) + ": " + out.reason);
        return false;
    }
    if (!certificate_ok(inst, out)) {
        res.notes.push_back(std::string(name) + ": certificate failed re-verification");
        return false;
    }
    res.outcome = std::move(out);
    res.strategy = name;
    return true;
}

SolveOutcome solve_universal_split(const Instance& inst, PortfolioResult& res) {
    auto subs = turing_split_universal(inst);
    for (const auto& sub : subs) {
        SolveOutcome out = oracle_exists(sub.instance);
        if (out.answer != Answer::Yes)
            continue;
        PathCertificate lifted;
        for (int v : out.certificate->vertices)
            lifted.vertices.push_back(sub.vertex_to_orig[v]);
        for (int e : out.certificate->edge_indices)
            lifted.edge_indices.push_back(sub.edge_to_orig[e]);
        return SolveOutcome::yes(std::move(lifted));
    }
    (void)res;
    return SolveOutcome::no();
}

SolveOutcome run_oracle(const Instance& inst, const PortfolioPolicy& policy) {
    if (inst.max_vertices)
        return oracle_shortest(inst);
    return oracle_exists_bounded(inst, std::chrono::milliseconds(policy.time_budget_ms));
}

} // namespace

PortfolioResult solve_portfolio(const Instance& inst, const PortfolioPolicy& policy) {
    PortfolioResult res;
    res.outcome = SolveOutcome::inconclusive("no strategy attempted");

    switch (policy.strategy) {
    case Strategy::Oracle:
        settle(inst, run_oracle(inst, policy), "oracle", res);
        break;
    case Strategy::Statespace:
        settle(inst, solve_statespace(inst, policy.type_budget), "statespace", res);
        break;
    case Strategy::Fen:
        settle(inst, solve_fen(inst, policy.fen_budget), "fen", res);
        break;
    case Strategy::Cactus:
        settle(inst, solve_cactus(inst), "cactus", res);
        break;
    case Strategy::ColorCoding:
        settle(inst,
               solve_deterministic(inst, inst.max_vertices.value_or(inst.graph.n)),
               "colorcoding", res);
        break;
    case Strategy::Auto: {
        const auto& g = inst.graph;
        if (inst.s == inst.t) {
            PathCertificate cert;
            cert.vertices.push_back(inst.s);
            res.outcome = SolveOutcome::yes(cert);
            res.strategy = "trivial";
            break;
        }
        if (!inst.max_vertices && is_cactus(g)) {
            if (settle(inst, solve_cactus(inst), "cactus", res))
                break;
        } else if (inst.max_vertices && is_cactus(g)) {
            res.notes.push_back("cactus: existence only, instance has a length bound");
        }
        int fen = g.m() - g.n + count_components(g);
        if (fen <= policy.fen_budget) {
            if (settle(inst, solve_fen(inst, policy.fen_budget), "fen", res))
                break;
        } else {
            res.notes.push_back("fen: " + std::to_string(fen) + " exceeds budget");
        }
        TypeIndex idx = build_type_index(g);
        if (idx.count <= policy.type_budget) {
            if (settle(inst, solve_statespace(inst, policy.type_budget), "statespace", res))
                break;
        } else {
            res.notes.push_back("statespace: |D(G)| = " + std::to_string(idx.count) +
                                " exceeds budget");
        }
        int mu = 0;
        for (int v = 1; v <= g.n; ++v)
            mu = std::max(mu, static_cast<int>(g.f(v).size()));
        bool universal = static_cast<int>(g.adj[inst.s].size()) == g.n - 1;
        if (universal && !inst.max_vertices && mu <= 22) {
            if (settle(inst, solve_universal_split(inst, res), "universal-split", res))
                break;
        } else if (universal && !inst.max_vertices) {
            res.notes.push_back("universal-split: subinstances too large (mu = " +
                                std::to_string(mu) + ")");
        }
        if (inst.max_vertices) {
            if (settle(inst, solve_deterministic(inst, *inst.max_vertices),
                       "colorcoding", res))
                break;
        }
        settle(inst, run_oracle(inst, policy), "oracle", res);
        break;
    }
    }
    if (res.outcome.answer == Answer::Inconclusive && !res.notes.empty()) {
        std::string all;
        for (const auto& n : res.notes) {
            if (!all.empty())
                all += "; ";
            all += n;
        }
        res.outcome.reason = all;
        if (res.strategy.empty())
            res.strategy = "none";
    }
    return res;
}

} // namespace sdp
