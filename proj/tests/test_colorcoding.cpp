#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "helpers.hpp"
#include "sdp/colorcoding.hpp"
#include "sdp/oracle.hpp"

using namespace sdp;

namespace {

EdgeColoring coloring(int q, std::vector<int> colors) {
    EdgeColoring chi;
    chi.q = q;
    chi.color.assign(1, 0);
    chi.color.insert(chi.color.end(), colors.begin(), colors.end());
    return chi;
}

} // namespace

TEST_CASE("an all-distinct coloring is rainbow and half-rainbow") {
    auto g = make_graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {{}, {4}, {}, {}, {}});
    PathCertificate p;
    p.vertices = {1, 2, 3, 4};
    p.edge_indices = {1, 2, 3};
    auto cls = classify_path(g, coloring(4, {1, 2, 3, 4}), p);
    CHECK(cls.chi_rainbow);
    CHECK(cls.half_chi_rainbow);
    CHECK(cls.chi_compliant);
}

TEST_CASE("conforming f-deletion sharing a path color breaks compliance") {
    // edge 1 = {1,2} is the path, edge 2 = {2,3} is in f(1) and shares color 1
    auto g = make_graph(3, {{1, 2}, {2, 3}}, {{}, {2}, {}, {}});
    PathCertificate p;
    p.vertices = {1, 2};
    p.edge_indices = {1};
    CHECK(is_f_conforming(g, p).ok());
    auto cls = classify_path(g, coloring(2, {1, 1}), p);
    CHECK(!cls.chi_compliant);
    CHECK(!cls.half_chi_rainbow);
    auto distinct = classify_path(g, coloring(2, {1, 2}), p);
    CHECK(distinct.chi_compliant);
}

TEST_CASE("implication chain holds on random samples") {
    SplitMix64 rng(201);
    for (int trial = 0; trial < 300; ++trial) {
        auto inst = helpers::random_connected(8, 4, 2, rng);
        auto paths = oracle_enumerate(inst, 3);
        int q = 1 + static_cast<int>(rng.below(5));
        EdgeColoring chi;
        chi.q = q;
        chi.color.assign(inst.graph.m() + 1, 0);
        for (int e = 1; e <= inst.graph.m(); ++e)
            chi.color[e] = 1 + static_cast<int>(rng.below(q));
        for (const auto& p : paths) {
            auto cls = classify_path(inst.graph, chi, p);
            if (cls.chi_rainbow)
                CHECK(cls.half_chi_rainbow);
            if (cls.half_chi_rainbow)   // paths from the oracle are conforming
                CHECK(cls.chi_compliant);
        }
    }
}

TEST_CASE("single edge with one color is found") {
    auto inst = helpers::make(2, {{1, 2}}, {}, 1, 2);
    auto out = chi_compliant_search(inst, coloring(1, {1}), {1}, 2);
    REQUIRE(out.answer == Answer::Yes);
    CHECK(out.length == 2);
}

TEST_CASE("the search is one-sided under a bad coloring") {
    // instance is Yes, but the coloring identifies the path edge with a
    // deleted edge's color, so this trial misses it
    auto g = make_graph(3, {{1, 2}, {2, 3}}, {{}, {2}, {}, {}});
    Instance inst{g, 1, 2, std::nullopt};
    CHECK(oracle_exists(inst).answer == Answer::Yes);
    CHECK(chi_compliant_search(inst, coloring(2, {1, 1}), {1, 2}, 3).answer == Answer::No);
}

TEST_CASE("yes-certificates verify and respect k") {
    SplitMix64 rng(203);
    for (int trial = 0; trial < 200; ++trial) {
        auto inst = helpers::random_connected(8, 4, 2, rng);
        int q = 3 + static_cast<int>(rng.below(4));
        EdgeColoring chi;
        chi.q = q;
        chi.color.assign(inst.graph.m() + 1, 0);
        for (int e = 1; e <= inst.graph.m(); ++e)
            chi.color[e] = 1 + static_cast<int>(rng.below(q));
        std::vector<int> Q(q);
        for (int c = 1; c <= q; ++c)
            Q[c - 1] = c;
        int k = 2 + static_cast<int>(rng.below(7));
        auto out = chi_compliant_search(inst, chi, Q, k);
        if (out.answer == Answer::Yes) {
            CHECK(out.length <= k);
            CHECK(is_f_conforming(inst.graph, *out.certificate, true).ok());
            CHECK(oracle_exists(inst).answer == Answer::Yes);
        }
    }
}

TEST_CASE("perfect family members cover small edge sets") {
    SplitMix64 rng(207);
    for (int trial = 0; trial < 40; ++trial) {
        long long m = 5 + static_cast<long long>(rng.below(196));
        int q = 1 + static_cast<int>(rng.below(6));
        auto fam = build_perfect_family(m, q);
        std::set<long long> F;
        int size = static_cast<int>(rng.below(q + 1));
        while (static_cast<int>(F.size()) < size)
            F.insert(1 + static_cast<long long>(rng.below(m)));
        bool covered = F.empty();
        for (long long a = 1; a < fam.p && !covered; ++a) {
            auto chi = fam.member(a);
            std::set<int> seen;
            bool inj = true;
            for (long long e : F)
                if (!seen.insert(chi.of(static_cast<int>(e))).second)
                    inj = false;
            covered = inj;
        }
        CHECK(covered);
    }
}

TEST_CASE("first member is injective on singletons") {
    auto fam = build_perfect_family(50, 3);
    auto chi = fam.member(1);
    CHECK(chi.of(7) >= 1);
    CHECK(chi.of(7) <= fam.range);
}

TEST_CASE("deterministic driver decides small instances like the oracle") {
    SplitMix64 rng(211);
    for (int trial = 0; trial < 60; ++trial) {
        auto inst = helpers::random_connected(8, 4, 2, rng);
        int k = 2 + static_cast<int>(rng.below(4));
        Instance bounded = inst;
        bounded.max_vertices = k;
        auto ref = oracle_exists(bounded);
        auto out = solve_deterministic(inst, k);
        REQUIRE(out.answer != Answer::Inconclusive);
        CHECK(out.answer == ref.answer);
        if (out.answer == Answer::Yes) {
            CHECK(out.length <= k);
            CHECK(is_f_conforming(inst.graph, *out.certificate, true).ok());
        }
    }
}

TEST_CASE("deterministic driver with mu=0 is plain bounded BFS") {
    auto inst = helpers::make(2, {{1, 2}}, {}, 1, 2);
    CHECK(solve_deterministic(inst, 2).answer == Answer::Yes);
    auto path = helpers::make(4, {{1, 2}, {2, 3}, {3, 4}}, {}, 1, 4);
    CHECK(solve_deterministic(path, 3).answer == Answer::No);
    CHECK(solve_deterministic(path, 4).answer == Answer::Yes);
}

TEST_CASE("randomized driver finds the single edge on the first trial") {
    auto inst = helpers::make(2, {{1, 2}}, {}, 1, 2);
    CHECK(solve_randomized(inst, 2, 0.05, 0).answer == Answer::Yes);
}

TEST_CASE("randomized driver never answers Yes on no-instances") {
    SplitMix64 rng(213);
    int checked = 0;
    for (int trial = 0; trial < 120 && checked < 25; ++trial) {
        auto inst = helpers::random_connected(8, 4, 2, rng);
        int k = 2 + static_cast<int>(rng.below(4));
        Instance bounded = inst;
        bounded.max_vertices = k;
        if (oracle_exists(bounded).answer != Answer::No)
            continue;
        ++checked;
        auto out = solve_randomized(inst, k, 0.2, trial);
        CHECK(out.answer != Answer::Yes);
    }
    CHECK(checked > 0);
}

TEST_CASE("randomized yes-certificates verify") {
    SplitMix64 rng(217);
    for (int trial = 0; trial < 20; ++trial) {
        auto inst = helpers::random_connected(8, 4, 1, rng);
        auto out = solve_randomized(inst, 6, 0.05, trial);
        if (out.answer == Answer::Yes) {
            CHECK(out.length <= 6);
            CHECK(is_f_conforming(inst.graph, *out.certificate, true).ok());
        }
    }
}
