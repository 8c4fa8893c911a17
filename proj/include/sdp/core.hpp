#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sdp {

// Undirected graph with 1-based vertex ids and 1-based edge indices, plus a
// per-vertex deletion set f(v) of edge indices. Visiting v removes every edge
// in f(v) for the rest of the traversal; f(v) may reference edges anywhere in
// the graph, not just edges incident to v.
struct SelfDeletingGraph {
    int n = 0;
    std::vector<std::array<int, 2>> edges;                 // edges[i-1] = endpoints of edge i
    std::vector<std::vector<std::pair<int, int>>> adj;     // adj[v] = (neighbor, edge id), ascending edge id
    std::vector<std::vector<int>> deletions;               // deletions[v] = f(v), sorted, deduplicated

    int m() const { return static_cast<int>(edges.size()); }
    const std::vector<int>& f(int v) const { return deletions[v]; }
};

// Builds adjacency and normalizes deletion sets (sorted, duplicates collapsed).
// Does not validate; call validate() for diagnostics.
SelfDeletingGraph make_graph(int n,
                             std::vector<std::array<int, 2>> edges,
                             std::vector<std::vector<int>> deletions = {});

// All invariant violations, empty when the graph is well formed.
std::vector<std::string> validate(const SelfDeletingGraph& g);

struct Instance {
    SelfDeletingGraph graph;
    int s = 1;
    int t = 1;
    std::optional<int> max_vertices;   // k in the shortest variant
};

// Alternating vertex/edge-index sequence (v_1, e_1, v_2, ..., e_{r-1}, v_r).
struct PathCertificate {
    std::vector<int> vertices;
    std::vector<int> edge_indices;

    int length() const { return static_cast<int>(vertices.size()); }
    bool operator==(const PathCertificate&) const = default;
};

enum class WalkDefect { None, Structural, Conformity };

struct ConformityCheck {
    WalkDefect defect = WalkDefect::None;
    std::string detail;     // first violation, empty when ok

    bool ok() const { return defect == WalkDefect::None; }
};

// Checks that the walk is structurally valid and f-conforming: e_i is not in
// f(v_j) for any j <= i. Structural defects (bad edge, repeated vertex when
// require_simple) are reported distinctly from conformity defects.
ConformityCheck is_f_conforming(const SelfDeletingGraph& g,
                                const PathCertificate& walk,
                                bool require_simple = false);

// Excises the segment between two occurrences of a repeated vertex until the
// walk is a simple path. The result is f-conforming whenever the input is;
// throws std::invalid_argument when the input walk is not f-conforming.
PathCertificate shorten_walk(const SelfDeletingGraph& g, const PathCertificate& walk);

enum class Answer { Yes, No, Inconclusive };

struct SolveOutcome {
    Answer answer = Answer::Inconclusive;
    std::optional<PathCertificate> certificate;
    int length = 0;                     // vertices of the certificate, Yes only
    std::string reason;                 // Inconclusive only

    static SolveOutcome yes(PathCertificate cert) {
        SolveOutcome o;
        o.answer = Answer::Yes;
        o.length = cert.length();
        o.certificate = std::move(cert);
        return o;
    }
    static SolveOutcome no() {
        SolveOutcome o;
        o.answer = Answer::No;
        return o;
    }
    static SolveOutcome inconclusive(std::string why) {
        SolveOutcome o;
        o.answer = Answer::Inconclusive;
        o.reason = std::move(why);
        return o;
    }
};

struct InstanceStats {
    int n = 0;
    int m = 0;
    int mu = 0;                       // max_v |f(v)|
    long long total_f = 0;            // sum_v |f(v)|
    int distinct_deletion_sets = 0;   // |D(G)|
    int fen = 0;                      // m - n + cc(G)
    bool is_cactus = false;
    bool universal_source = false;    // s adjacent to every other vertex
    bool connected = false;
};

InstanceStats stats(const SelfDeletingGraph& g, int s, int t);

struct InducedSubgraph {
    SelfDeletingGraph graph;
    std::vector<int> vertex_to_orig;    // 1-based new id -> original id
    std::vector<int> edge_to_orig;      // 1-based new edge -> original edge
    std::vector<int> orig_vertex_to_new; // 0 when dropped
};

// Induced subgraph on the given vertex set; deletion sets are restricted to
// surviving edges and remapped. New ids follow the order of `vertices`.
InducedSubgraph induced_subgraph(const SelfDeletingGraph& g, const std::vector<int>& vertices);

int count_components(const SelfDeletingGraph& g);

} // namespace sdp
