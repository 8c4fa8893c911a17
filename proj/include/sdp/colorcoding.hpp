#pragma once

#include <cstdint>
#include <vector>

#include "sdp/core.hpp"

namespace sdp {

struct EdgeColoring {
    int q = 0;
    std::vector<int> color;    // 1-based edge id -> color in 1..q

    int of(int e) const { return color[e]; }
};

struct PathClass {
    bool chi_compliant = false;
    bool half_chi_rainbow = false;
    bool chi_rainbow = false;
};

// The three color-level path properties; rainbow implies half-rainbow, and a
// conforming half-rainbow path is compliant.
PathClass classify_path(const SelfDeletingGraph& g, const EdgeColoring& chi,
                        const PathCertificate& path);

// BFS over (vertex, available-color-set) states restricted to colors in Q;
// looks for a chi-compliant s-t walk on at most k vertices and returns it
// shortened to a path (always f-conforming). Inconclusive when more than 64
// colors of Q actually occur on edges in s's component.
SolveOutcome chi_compliant_search(const Instance& inst, const EdgeColoring& chi,
                                  const std::vector<int>& Q, int k);

// Trial colorings are uniform with q = 4*k*max(mu,1) colors; runs
// ceil(2^k * ln(1/epsilon)) trials seeded seed+trial. One-sided: Yes answers
// carry a verified certificate, exhausted trials give Inconclusive.
SolveOutcome solve_randomized(const Instance& inst, int k, double epsilon, std::uint64_t seed);

// Members are e -> ((a*e) mod p) mod q^2 + 1 for a in 1..p-1, p the smallest
// prime above max(m, q^2). For every edge set F with |F| <= q some member is
// injective on F.
struct PerfectFamily {
    long long m = 0;
    int q = 0;
    long long range = 0;    // q^2
    long long p = 0;

    long long size() const { return p - 1; }
    EdgeColoring member(long long a) const;   // a in 1..p-1
};

PerfectFamily build_perfect_family(long long m, int q);

// Deterministic driver: scans the family with q = max(mu,1)*k + k - 1. A
// member injective on all m edges makes its trial exact, so its No answer
// ends the scan immediately (always the case once m <= q^2).
SolveOutcome solve_deterministic(const Instance& inst, int k);

} // namespace sdp
