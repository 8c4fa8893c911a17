#include "sdp/sdg_io.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace sdp {

SdgParseError::SdgParseError(int line_, const std::string& what_)
    : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}

Instance parse_sdg(std::istream& in) {
    int n = -1, m = -1;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::vector<int>> dels;
    int s = 0, t = 0;
    std::optional<int> k;
    bool have_terminals = false;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#')
            continue;
        if (tag == "p") {
            std::string fmt;
            if (n >= 0)
                throw SdgParseError(lineno, "duplicate header");
            if (!(ls >> fmt >> n >> m) || fmt != "sdg" || n < 0 || m < 0)
                throw SdgParseError(lineno, "malformed header, expected 'p sdg <n> <m>'");
            dels.assign(n + 1, {});
        } else if (tag == "e") {
            if (n < 0)
                throw SdgParseError(lineno, "edge before header");
            int u, v;
            if (!(ls >> u >> v))
                throw SdgParseError(lineno, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw SdgParseError(lineno, "edge endpoint out of range");
            if (u == v)
                throw SdgParseError(lineno, "self-loop");
            if (static_cast<int>(edges.size()) == m)
                throw SdgParseError(lineno, "more than " + std::to_string(m) + " edges");
            edges.push_back({u, v});
        } else if (tag == "d") {
            if (n < 0)
                throw SdgParseError(lineno, "deletion before header");
            int v;
            if (!(ls >> v))
                throw SdgParseError(lineno, "malformed deletion line");
            if (v < 1 || v > n)
                throw SdgParseError(lineno, "deletion vertex out of range");
            int e;
            while (ls >> e) {
                if (e < 1 || e > m)
                    throw SdgParseError(lineno, "deleted edge out of range");
                dels[v].push_back(e);
            }
        } else if (tag == "t") {
            if (n < 0)
                throw SdgParseError(lineno, "terminals before header");
            if (have_terminals)
                throw SdgParseError(lineno, "duplicate terminal line");
            if (!(ls >> s >> t))
                throw SdgParseError(lineno, "malformed terminal line");
            if (s < 1 || s > n || t < 1 || t > n)
                throw SdgParseError(lineno, "terminal out of range");
            int kk;
            if (ls >> kk) {
                if (kk < 1)
                    throw SdgParseError(lineno, "length bound must be positive");
                k = kk;
            }
            have_terminals = true;
        } else {
            throw SdgParseError(lineno, "unknown line type '" + tag + "'");
        }
    }
    if (n < 0)
        throw SdgParseError(lineno, "missing header");
    if (static_cast<int>(edges.size()) != m)
        throw SdgParseError(lineno, "expected " + std::to_string(m) + " edges, got " +
                                        std::to_string(edges.size()));
    if (!have_terminals)
        throw SdgParseError(lineno, "missing terminal line");
    Instance inst;
    inst.graph = make_graph(n, std::move(edges), std::move(dels));
    inst.s = s;
    inst.t = t;
    inst.max_vertices = k;
    return inst;
}

Instance parse_sdg(const std::string& text) {
    std::istringstream in(text);
    return parse_sdg(in);
}

std::string write_sdg(const Instance& inst) {
    const auto& g = inst.graph;
    std::ostringstream out;
    out << "p sdg " << g.n << ' ' << g.m() << '\n';
    for (int e = 1; e <= g.m(); ++e)
        out << "e " << g.edges[e - 1][0] << ' ' << g.edges[e - 1][1] << '\n';
    for (int v = 1; v <= g.n; ++v) {
        if (g.f(v).empty())
            continue;
        out << "d " << v;
        for (int e : g.f(v))
            out << ' ' << e;
        out << '\n';
    }
    out << "t " << inst.s << ' ' << inst.t;
    if (inst.max_vertices)
        out << ' ' << *inst.max_vertices;
    out << '\n';
    return out.str();
}

} // namespace sdp
