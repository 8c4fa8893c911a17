#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "sdp/sdg_io.hpp"

using namespace sdp;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_data = "") {
    std::string in_file = std::string(std::tmpnam(nullptr)) + ".in";
    {
        std::ofstream f(in_file);
        f << stdin_data;
    }
    std::string cmd = std::string(SDPATH_BIN) + " " + args + " < " + in_file + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    RunResult res;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe))
        res.out.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::remove(in_file.c_str());
    return res;
}

std::string write_temp(const std::string& content, const char* suffix) {
    std::string path = std::string(std::tmpnam(nullptr)) + suffix;
    std::ofstream f(path);
    f << content;
    return path;
}

const char* kYesInstance = "p sdg 2 1\ne 1 2\nt 1 2\n";
const char* kNoInstance = "p sdg 2 1\ne 1 2\nd 1 1\nt 1 2\n";

} // namespace

TEST_CASE("sdg parsing round trip and errors") {
    auto inst = parse_sdg(std::string(kYesInstance));
    CHECK(inst.graph.n == 2);
    CHECK(inst.graph.m() == 1);
    CHECK(write_sdg(inst) == kYesInstance);
    CHECK(write_sdg(parse_sdg(write_sdg(inst))) == write_sdg(inst));
    CHECK_THROWS_AS(parse_sdg(std::string("p sdg 2 1\ne 1 2\nd 1 0\nt 1 2\n")),
                    SdgParseError);
    CHECK_THROWS_AS(parse_sdg(std::string("p sdg 2 1\ne 1 2\n")), SdgParseError);
    CHECK_THROWS_AS(parse_sdg(std::string("e 1 2\nt 1 2\n")), SdgParseError);
    try {
        parse_sdg(std::string("p sdg 2 1\ne 1 3\nt 1 2\n"));
        CHECK(false);
    } catch (const SdgParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("solve prints YES with a path and exits 0") {
    auto file = write_temp(kYesInstance, ".sdg");
    auto res = run("solve " + file);
    CHECK(res.exit_code == 0);
    CHECK(res.out == "YES\nPATH 1 2\n");
    std::remove(file.c_str());
}

TEST_CASE("solve prints NO and exits 1") {
    auto file = write_temp(kNoInstance, ".sdg");
    auto res = run("solve " + file);
    CHECK(res.exit_code == 1);
    CHECK(res.out == "NO\n");
    std::remove(file.c_str());
}

TEST_CASE("solve reads from stdin and honors --strategy") {
    auto res = run("solve - --strategy statespace", kYesInstance);
    CHECK(res.exit_code == 0);
    CHECK(res.out.rfind("YES\n", 0) == 0);
}

TEST_CASE("parse errors exit 64") {
    auto file = write_temp("p sdg 2\n", ".sdg");
    CHECK(run("solve " + file).exit_code == 64);
    std::remove(file.c_str());
    CHECK(run("bogus-subcommand").exit_code == 64);
}

TEST_CASE("the cactus golden file solves to the documented path") {
    auto res = run(std::string("solve ") + DATA_DIR + "/cactus_example.sdg");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "YES\nPATH 1 3 4 5 7 8 9 10\n");
}

TEST_CASE("verify accepts the documented path and rejects others") {
    auto good = write_temp("1 3 4 5 7 8 9 10\n", ".path");
    auto bad = write_temp("1 2 4 5 7 8 9 10\n", ".path");
    CHECK(run(std::string("verify ") + DATA_DIR + "/cactus_example.sdg " + good).exit_code == 0);
    auto r = run(std::string("verify ") + DATA_DIR + "/cactus_example.sdg " + bad);
    CHECK(r.exit_code == 1);
    std::remove(good.c_str());
    std::remove(bad.c_str());
}

TEST_CASE("kernelize emits a valid reduced instance") {
    auto file = write_temp("p sdg 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\nt 1 5\n", ".sdg");
    auto res = run("kernelize " + file);
    CHECK(res.exit_code == 0);
    auto reduced = parse_sdg(res.out);
    CHECK(reduced.graph.n == 3);
    std::remove(file.c_str());
}

TEST_CASE("stats reports the instance parameters") {
    auto res = run(std::string("stats ") + DATA_DIR + "/cactus_example.sdg");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("n 10\n") != std::string::npos);
    CHECK(res.out.find("m 12\n") != std::string::npos);
    CHECK(res.out.find("cactus yes\n") != std::string::npos);
}

TEST_CASE("generate random is deterministic and parsable") {
    auto a = run("generate random --n 10 --m 15 --mu 2 --seed 5");
    auto b = run("generate random --n 10 --m 15 --mu 2 --seed 5");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    auto inst = parse_sdg(a.out);
    CHECK(inst.graph.n == 10);
    CHECK(inst.graph.m() == 15);
}

TEST_CASE("generate cnf pipes into solve") {
    auto dimacs = write_temp("p cnf 1 2\n1 0\n-1 0\n", ".cnf");
    auto gen = run("generate cnf " + dimacs);
    CHECK(gen.exit_code == 0);
    auto res = run("solve -", gen.out);
    CHECK(res.exit_code == 1);   // unsatisfiable formula
    std::remove(dimacs.c_str());
}

TEST_CASE("generate mcc and iset read their headers") {
    auto mcc = run("generate mcc -", "p mcc 2 1 2\ne 1 2\nc 1 1\nc 2 2\n");
    CHECK(mcc.exit_code == 0);
    CHECK(run("solve -", mcc.out).exit_code == 0);
    auto iset = run("generate iset -",
                    "p cubic 4 6 1\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
    CHECK(iset.exit_code == 0);
    auto inst = parse_sdg(iset.out);
    CHECK(inst.graph.n == 33);
    CHECK(*inst.max_vertices == 20);
}

TEST_CASE("bench emits one CSV row per instance") {
    std::string dir = std::string(std::tmpnam(nullptr)) + ".d";
    REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
    {
        std::ofstream(dir + "/a.sdg") << kYesInstance;
        std::ofstream(dir + "/b.sdg") << kNoInstance;
    }
    auto res = run("bench " + dir);
    CHECK(res.exit_code == 0);
    CHECK(res.out.rfind("instance,strategy,answer,length,wall_ms\n", 0) == 0);
    CHECK(res.out.find("a.sdg,") != std::string::npos);
    CHECK(res.out.find(",YES,") != std::string::npos);
    CHECK(res.out.find("b.sdg,") != std::string::npos);
    CHECK(res.out.find(",NO,") != std::string::npos);
    std::remove((dir + "/a.sdg").c_str());
    std::remove((dir + "/b.sdg").c_str());
}
