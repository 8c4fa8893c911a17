#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "sdp/core.hpp"
#include "sdp/generate.hpp"

using namespace sdp;

TEST_CASE("validate accepts the minimal graph") {
    auto g = make_graph(2, {{1, 2}});
    CHECK(validate(g).empty());
}

TEST_CASE("validate reports endpoint out of range") {
    auto g = make_graph(2, {{1, 3}});
    auto errs = validate(g);
    REQUIRE(!errs.empty());
    CHECK(errs[0].find("out of range") != std::string::npos);
}

TEST_CASE("validate reports dangling deletion reference") {
    auto g = make_graph(2, {{1, 2}}, {{}, {5}, {}});
    auto errs = validate(g);
    REQUIRE(!errs.empty());
    CHECK(errs[0].find("missing edge") != std::string::npos);
}

TEST_CASE("validate rejects self-loops and duplicate edges") {
    CHECK(!validate(make_graph(2, {{1, 1}})).empty());
    CHECK(!validate(make_graph(3, {{1, 2}, {2, 1}})).empty());
}

TEST_CASE("deletion sets are sorted and deduplicated") {
    auto g = make_graph(2, {{1, 2}}, {{}, {1, 1, 1}, {}});
    CHECK(g.f(1) == std::vector<int>{1});
}

TEST_CASE("single-vertex walk is conforming") {
    auto g = make_graph(2, {{1, 2}});
    PathCertificate w;
    w.vertices = {1};
    CHECK(is_f_conforming(g, w).ok());
}

TEST_CASE("deletion by the walk's first vertex blocks the first edge") {
    auto g = make_graph(2, {{1, 2}}, {{}, {1}, {}});
    PathCertificate w;
    w.vertices = {1, 2};
    w.edge_indices = {1};
    auto res = is_f_conforming(g, w);
    CHECK(!res.ok());
    CHECK(res.defect == WalkDefect::Conformity);
}

TEST_CASE("deletion fires only after the edge is traversed") {
    auto g = make_graph(2, {{1, 2}}, {{}, {}, {1}});
    PathCertificate w;
    w.vertices = {1, 2};
    w.edge_indices = {1};
    CHECK(is_f_conforming(g, w).ok());
}

TEST_CASE("structural defects are distinguished from conformity defects") {
    auto g = make_graph(3, {{1, 2}, {2, 3}});
    PathCertificate w;
    w.vertices = {1, 3};
    w.edge_indices = {1};   // edge 1 does not join 1 and 3
    CHECK(is_f_conforming(g, w).defect == WalkDefect::Structural);
    PathCertificate rep;
    rep.vertices = {1, 2, 1};
    rep.edge_indices = {1, 1};
    CHECK(is_f_conforming(g, rep).ok());
    CHECK(is_f_conforming(g, rep, true).defect == WalkDefect::Structural);
}

TEST_CASE("prefixes of conforming walks are conforming") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto inst = helpers::random_connected(8, 4, 2, rng);
        auto walk = helpers::random_conforming_walk(inst.graph, 1, 10, rng);
        if (!walk)
            continue;
        REQUIRE(is_f_conforming(inst.graph, *walk).ok());
        PathCertificate pre;
        pre.vertices = {walk->vertices[0]};
        for (std::size_t i = 0; i + 1 < walk->vertices.size(); ++i) {
            CHECK(is_f_conforming(inst.graph, pre).ok());
            pre.vertices.push_back(walk->vertices[i + 1]);
            pre.edge_indices.push_back(walk->edge_indices[i]);
        }
    }
}

TEST_CASE("shorten_walk is the identity on simple paths") {
    auto g = make_graph(3, {{1, 2}, {2, 3}});
    PathCertificate w;
    w.vertices = {1, 2, 3};
    w.edge_indices = {1, 2};
    CHECK(shorten_walk(g, w) == w);
}

TEST_CASE("shorten_walk excises loops") {
    auto g = make_graph(3, {{1, 2}, {1, 3}});
    PathCertificate w;
    w.vertices = {1, 2, 1, 3};
    w.edge_indices = {1, 1, 2};
    auto p = shorten_walk(g, w);
    CHECK(p.vertices == std::vector<int>{1, 3});
    CHECK(p.edge_indices == std::vector<int>{2});
}

TEST_CASE("shorten_walk rejects non-conforming input") {
    auto g = make_graph(2, {{1, 2}}, {{}, {1}, {}});
    PathCertificate w;
    w.vertices = {1, 2};
    w.edge_indices = {1};
    CHECK_THROWS_AS(shorten_walk(g, w), std::invalid_argument);
}

TEST_CASE("shortened random conforming walks remain conforming simple paths") {
    SplitMix64 rng(23);
    int seen = 0;
    for (int trial = 0; trial < 200 && seen < 60; ++trial) {
        auto inst = helpers::random_connected(9, 6, 2, rng);
        auto walk = helpers::random_conforming_walk(inst.graph, 1, 14, rng);
        if (!walk)
            continue;
        ++seen;
        auto p = shorten_walk(inst.graph, *walk);
        CHECK(is_f_conforming(inst.graph, p, true).ok());
        CHECK(p.vertices.front() == walk->vertices.front());
        CHECK(p.vertices.back() == walk->vertices.back());
        CHECK(p.edge_indices.size() <= walk->edge_indices.size());
    }
    CHECK(seen > 0);
}

TEST_CASE("stats on a path of three vertices") {
    auto g = make_graph(3, {{1, 2}, {2, 3}});
    auto st = stats(g, 1, 3);
    CHECK(st.mu == 0);
    CHECK(st.total_f == 0);
    CHECK(st.distinct_deletion_sets == 1);
    CHECK(st.fen == 0);
    CHECK(st.is_cactus);
    CHECK(st.connected);
}

TEST_CASE("stats on C4") {
    auto g = make_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    CHECK(stats(g, 1, 3).fen == 1);
}

TEST_CASE("stats mu on the three-clause formula instance") {
    // (x v ~y v ~z) & (~x v y v ~z) & (~x v y v z): max literal occurrence is 2
    CnfFormula phi;
    phi.vars = 3;
    phi.clauses = {{1, -2, -3}, {-1, 2, -3}, {-1, 2, 3}};
    auto inst = from_cnf(phi);
    auto st = stats(inst.graph, inst.s, inst.t);
    CHECK(st.n == 30);
    CHECK(st.m == 38);
    CHECK(st.mu == 2);
}

TEST_CASE("stats recomputation matches raw fields") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto inst = helpers::random_connected(10, 5, 3, rng);
        auto st = stats(inst.graph, inst.s, inst.t);
        int mu = 0;
        long long total = 0;
        for (int v = 1; v <= inst.graph.n; ++v) {
            mu = std::max(mu, static_cast<int>(inst.graph.f(v).size()));
            total += inst.graph.f(v).size();
        }
        CHECK(st.mu == mu);
        CHECK(st.total_f == total);
        CHECK(st.fen == inst.graph.m() - inst.graph.n + count_components(inst.graph));
    }
}

TEST_CASE("induced_subgraph on the full vertex set is the identity") {
    auto g = make_graph(4, {{1, 2}, {2, 3}, {3, 4}}, {{}, {2}, {}, {}, {}});
    auto sub = induced_subgraph(g, {1, 2, 3, 4});
    CHECK(sub.graph.edges == g.edges);
    CHECK(sub.graph.deletions == g.deletions);
    for (int v = 1; v <= 4; ++v)
        CHECK(sub.vertex_to_orig[v] == v);
}

TEST_CASE("induced_subgraph restricted to a triangle of K4") {
    auto g = make_graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
                        {{}, {3, 4}, {}, {}, {}});
    auto sub = induced_subgraph(g, {1, 2, 3});
    CHECK(sub.graph.n == 3);
    CHECK(sub.graph.m() == 3);
    // f(1) = {3,4}: edge 3 ({1,4}) is gone, edge 4 ({2,3}) survives remapped
    REQUIRE(sub.graph.f(1).size() == 1);
    CHECK(sub.edge_to_orig[sub.graph.f(1)[0]] == 4);
}
