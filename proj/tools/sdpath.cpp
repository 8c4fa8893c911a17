#include <algorithm>
#include <array>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sdp/cactus.hpp"
#include "sdp/core.hpp"
#include "sdp/generate.hpp"
#include "sdp/kernelize.hpp"
#include "sdp/portfolio.hpp"
#include "sdp/sdg_io.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

sdp::Instance load_instance(const std::string& path) {
    sdp::Instance inst = sdp::parse_sdg(slurp(path));
    auto errs = sdp::validate(inst.graph);
    if (!errs.empty())
        throw std::runtime_error("invalid instance: " + errs.front());
    return inst;
}

struct SolveFlags {
    std::string strategy = "auto";
    int k = 0;
    double epsilon = 0.05;
    std::uint64_t seed = 0;
    int fen_budget = 20;
    int type_budget = 24;
    long long time_budget = 30000;
};

void add_solve_flags(CLI::App* cmd, SolveFlags& f) {
    cmd->add_option("--strategy", f.strategy, "auto|oracle|statespace|fen|cactus|colorcoding")
        ->check(CLI::IsMember({"auto", "oracle", "statespace", "fen", "cactus", "colorcoding"}));
    cmd->add_option("--k", f.k, "override the path length bound (vertices)");
    cmd->add_option("--epsilon", f.epsilon, "randomized driver failure probability");
    cmd->add_option("--seed", f.seed, "random seed");
    cmd->add_option("--fen-budget", f.fen_budget, "max feedback edge number for full enumeration");
    cmd->add_option("--type-budget", f.type_budget, "max distinct deletion sets for the state-space solver");
    cmd->add_option("--time-budget", f.time_budget, "oracle fallback budget in milliseconds");
}

sdp::PortfolioPolicy make_policy(const SolveFlags& f) {
    sdp::PortfolioPolicy p;
    if (f.strategy == "oracle") p.strategy = sdp::Strategy::Oracle;
    else if (f.strategy == "statespace") p.strategy = sdp::Strategy::Statespace;
    else if (f.strategy == "fen") p.strategy = sdp::Strategy::Fen;
    else if (f.strategy == "cactus") p.strategy = sdp::Strategy::Cactus;
    else if (f.strategy == "colorcoding") p.strategy = sdp::Strategy::ColorCoding;
    p.fen_budget = f.fen_budget;
    p.type_budget = f.type_budget;
    p.epsilon = f.epsilon;
    p.seed = f.seed;
    p.time_budget_ms = f.time_budget;
    return p;
}

int report(const sdp::PortfolioResult& res) {
    switch (res.outcome.answer) {
    case sdp::Answer::Yes:
        std::cout << "YES\n";
        std::cout << "PATH";
        for (int v : res.outcome.certificate->vertices)
            std::cout << ' ' << v;
        std::cout << '\n';
        std::cerr << "strategy: " << res.strategy << ", length " << res.outcome.length << '\n';
        return kExitYes;
    case sdp::Answer::No:
        std::cout << "NO\n";
        std::cerr << "strategy: " << res.strategy << '\n';
        return kExitNo;
    default:
        std::cout << "UNKNOWN\n";
        std::cerr << res.outcome.reason << '\n';
        return kExitUnknown;
    }
}

int cmd_solve(const std::string& file, const SolveFlags& flags) {
    sdp::Instance inst = load_instance(file);
    if (flags.k > 0)
        inst.max_vertices = flags.k;
    return report(sdp::solve_portfolio(inst, make_policy(flags)));
}

int cmd_verify(const std::string& file, const std::string& pathfile) {
    sdp::Instance inst = load_instance(file);
    std::istringstream in(slurp(pathfile));
    sdp::PathCertificate cert;
    int v;
    while (in >> v)
        cert.vertices.push_back(v);
    // recover edge indices: endpoint pairs are unique in a well-formed graph
    const auto& g = inst.graph;
    for (std::size_t i = 0; i + 1 < cert.vertices.size(); ++i) {
        int a = cert.vertices[i], b = cert.vertices[i + 1];
        int found = 0;
        if (a >= 1 && a <= g.n)
            for (auto [w, e] : g.adj[a])
                if (w == b) { found = e; break; }
        if (!found) {
            std::cout << "NO\n";
            std::cerr << "no edge between " << a << " and " << b << '\n';
            return kExitNo;
        }
        cert.edge_indices.push_back(found);
    }
    if (cert.vertices.empty() || cert.vertices.front() != inst.s ||
        cert.vertices.back() != inst.t) {
        std::cout << "NO\n";
        std::cerr << "path does not connect s to t\n";
        return kExitNo;
    }
    if (inst.max_vertices && cert.length() > *inst.max_vertices) {
        std::cout << "NO\n";
        std::cerr << "path has " << cert.length() << " vertices, bound is "
                  << *inst.max_vertices << '\n';
        return kExitNo;
    }
    auto check = sdp::is_f_conforming(g, cert, true);
    if (!check.ok()) {
        std::cout << "NO\n";
        std::cerr << check.detail << '\n';
        return kExitNo;
    }
    std::cout << "YES\n";
    return kExitYes;
}

int cmd_kernelize(const std::string& file) {
    sdp::Instance inst = load_instance(file);
    sdp::KernelResult res = sdp::kernelize_fen(inst);
    std::cout << sdp::write_sdg(res.reduced);
    for (const auto& rec : res.trace.log) {
        std::cerr << "rule " << rec.rule << ": removed";
        for (int u : rec.removed)
            std::cerr << ' ' << u;
        if (rec.introduced)
            std::cerr << ", introduced " << rec.introduced;
        std::cerr << '\n';
    }
    return 0;
}

int cmd_stats(const std::string& file) {
    sdp::Instance inst = load_instance(file);
    sdp::InstanceStats st = sdp::stats(inst.graph, inst.s, inst.t);
    std::cout << "n " << st.n << "\nm " << st.m << "\nmu " << st.mu << "\ntotal_f "
              << st.total_f << "\ndistinct_deletion_sets " << st.distinct_deletion_sets
              << "\nfen " << st.fen << "\ncactus " << (st.is_cactus ? "yes" : "no")
              << "\nuniversal_source " << (st.universal_source ? "yes" : "no")
              << "\nconnected " << (st.connected ? "yes" : "no") << '\n';
    if (inst.max_vertices)
        std::cout << "max_vertices " << *inst.max_vertices << '\n';
    return 0;
}

sdp::ColoredGraph parse_mcc(const std::string& text) {
    std::istringstream in(text);
    sdp::ColoredGraph g;
    int m = -1, k = -1;
    std::vector<int> cls;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#')
            continue;
        if (tag == "p") {
            std::string fmt;
            if (!(ls >> fmt >> g.n >> m >> k) || fmt != "mcc")
                throw std::runtime_error("expected 'p mcc <n> <m> <k>'");
            cls.assign(g.n + 1, 0);
            g.classes.assign(k, {});
        } else if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v))
                throw std::runtime_error("bad edge line");
            g.edges.push_back({u, v});
        } else if (tag == "c") {
            int v, c;
            if (!(ls >> v >> c) || v < 1 || v > g.n || c < 1 || c > k)
                throw std::runtime_error("bad class line");
            if (cls[v])
                throw std::runtime_error("vertex colored twice");
            cls[v] = c;
            g.classes[c - 1].push_back(v);
        } else {
            throw std::runtime_error("unknown line type '" + tag + "'");
        }
    }
    if (m < 0 || static_cast<int>(g.edges.size()) != m)
        throw std::runtime_error("edge count mismatch");
    for (int v = 1; v <= g.n; ++v)
        if (!cls[v])
            throw std::runtime_error("vertex " + std::to_string(v) + " has no class");
    return g;
}

std::pair<std::vector<std::array<int, 2>>, std::pair<int, int>>
parse_cubic(const std::string& text) {
    std::istringstream in(text);
    int n = -1, m = -1, k = -1;
    std::vector<std::array<int, 2>> edges;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#')
            continue;
        if (tag == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> m >> k) || fmt != "cubic")
                throw std::runtime_error("expected 'p cubic <n> <m> <k>'");
        } else if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v))
                throw std::runtime_error("bad edge line");
            edges.push_back({u, v});
        } else {
            throw std::runtime_error("unknown line type '" + tag + "'");
        }
    }
    if (n < 0 || static_cast<int>(edges.size()) != m)
        throw std::runtime_error("edge count mismatch");
    return {edges, {n, k}};
}

int cmd_bench(const std::string& dir, const SolveFlags& flags) {
    std::cout << "instance,strategy,answer,length,wall_ms\n";
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".sdg")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
        sdp::Instance inst;
        try {
            inst = load_instance(path.string());
        } catch (const std::exception& e) {
            std::cerr << "skipping " << path.string() << ": " << e.what() << '\n';
            continue;
        }
        auto t0 = std::chrono::steady_clock::now();
        sdp::PortfolioResult res = sdp::solve_portfolio(inst, make_policy(flags));
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        const char* ans = res.outcome.answer == sdp::Answer::Yes      ? "YES"
                          : res.outcome.answer == sdp::Answer::No     ? "NO"
                                                                      : "UNKNOWN";
        std::cout << path.filename().string() << ',' << res.strategy << ',' << ans << ','
                  << (res.outcome.answer == sdp::Answer::Yes ? res.outcome.length : 0)
                  << ',' << ms << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"self-deleting s-t-path toolkit"};
    app.require_subcommand(1);

    SolveFlags flags;
    std::string file, pathfile, dir;

    auto* solve = app.add_subcommand("solve", "solve an SDG instance");
    solve->add_option("file", file, "SDG file, or - for stdin")->required();
    add_solve_flags(solve, flags);

    auto* verify = app.add_subcommand("verify", "check a path against an instance");
    verify->add_option("file", file, "SDG file")->required();
    verify->add_option("path", pathfile, "whitespace-separated vertex ids")->required();

    auto* kern = app.add_subcommand("kernelize", "reduce an instance, trace to stderr");
    kern->add_option("file", file, "SDG file")->required();

    auto* statscmd = app.add_subcommand("stats", "print instance statistics");
    statscmd->add_option("file", file, "SDG file")->required();

    auto* bench = app.add_subcommand("bench", "solve every .sdg in a directory, CSV output");
    bench->add_option("dir", dir, "corpus directory")->required();
    add_solve_flags(bench, flags);

    auto* gen = app.add_subcommand("generate", "emit SDG instances");
    gen->require_subcommand(1);
    bool split = false;
    std::string input = "-";
    int gn = 10;
    long long gm = 15;
    int gmu = 2;
    std::uint64_t gseed = 0;

    auto* gcnf = gen->add_subcommand("cnf", "SAT reduction from DIMACS CNF");
    gcnf->add_option("input", input, "DIMACS file, or - for stdin");
    gcnf->add_flag("--split", split, "split deletion sets so that mu <= 1");

    auto* gmcc = gen->add_subcommand("mcc", "multicolored-clique reduction");
    gmcc->add_option("input", input, "colored graph file (p mcc header), or -");
    gmcc->add_flag("--split", split, "split deletion sets so that mu <= 1");

    auto* giset = gen->add_subcommand("iset", "independent-set reduction (cubic graphs)");
    giset->add_option("input", input, "graph file (p cubic header), or -");

    auto* grand = gen->add_subcommand("random", "seeded random instance");
    grand->add_option("--n", gn, "vertices");
    grand->add_option("--m", gm, "edges");
    grand->add_option("--mu", gmu, "max deletion set size");
    grand->add_option("--seed", gseed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (solve->parsed())
            return cmd_solve(file, flags);
        if (verify->parsed())
            return cmd_verify(file, pathfile);
        if (kern->parsed())
            return cmd_kernelize(file);
        if (statscmd->parsed())
            return cmd_stats(file);
        if (bench->parsed())
            return cmd_bench(dir, flags);
        if (gcnf->parsed()) {
            std::istringstream in(slurp(input));
            std::cout << sdp::write_sdg(sdp::from_cnf(sdp::parse_dimacs(in), split));
            return 0;
        }
        if (gmcc->parsed()) {
            std::cout << sdp::write_sdg(
                sdp::from_multicolored_clique(parse_mcc(slurp(input)), split));
            return 0;
        }
        if (giset->parsed()) {
            auto [edges, nk] = parse_cubic(slurp(input));
            std::cout << sdp::write_sdg(
                sdp::from_cubic_independent_set(nk.first, edges, nk.second));
            return 0;
        }
        if (grand->parsed()) {
            std::cout << sdp::write_sdg(sdp::random_instance(gn, gm, gmu, gseed));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
