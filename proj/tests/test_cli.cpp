#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "ppt/cli.hpp"
#include "ppt/corpus.hpp"
#include "ppt/graph6.hpp"

using namespace ppt;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

template <class F>
Run invoke(const RunConfig& cfg, F&& fn) {
    std::ostringstream out, err;
    int code = fn(cfg, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string line;
    while (std::getline(is, line)) out.push_back(line);
    return out;
}

std::string field(const std::string& line, std::size_t idx) {
    std::istringstream is(line);
    std::string tok;
    for (std::size_t i = 0; i <= idx; ++i)
        if (!std::getline(is, tok, '\t')) return "";
    return tok;
}

// writes a temporary graph6 file and removes it on destruction
struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        path = std::string("cli_test_") + std::to_string(reinterpret_cast<std::uintptr_t>(this)) +
               ".g6";
        std::ofstream f(path);
        f << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("compute on named families and single graphs") {
    RunConfig cfg;
    cfg.family = "path:6";
    Run r = invoke(cfg, run_compute);
    REQUIRE(r.code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 2);  // header + row
    CHECK(field(ls[1], 5) == "3");   // ppt
    CHECK(field(ls[1], 6) == "5");   // PPT

    RunConfig c5;
    c5.family = "cycle:5";
    auto r5 = invoke(c5, run_compute);
    auto row = lines_of(r5.out)[1];
    CHECK(field(row, 4) == "1");  // gamma_pk
    CHECK(field(row, 5) == "2");
    CHECK(field(row, 6) == "2");

    RunConfig k2;
    k2.g6 = "A_";
    auto rk = invoke(k2, run_compute);
    row = lines_of(rk.out)[1];
    CHECK(field(row, 4) == "1");
    CHECK(field(row, 5) == "1");
}

TEST_CASE("compute validates input selection") {
    RunConfig none;
    CHECK(invoke(none, run_compute).code == 2);
    RunConfig both;
    both.g6 = "A_";
    both.family = "path:3";
    CHECK(invoke(both, run_compute).code == 2);
    RunConfig bad;
    bad.g6 = "notagraph(";
    CHECK(invoke(bad, run_compute).code == 2);
    RunConfig badk;
    badk.g6 = "A_";
    badk.k = 0;
    CHECK(invoke(badk, run_compute).code == 2);
}

TEST_CASE("compute can filter to connected inputs") {
    TempFile f(graph6_encode(path_graph(3)) + "\n" + graph6_encode(empty_graph(3)) + "\n");
    RunConfig cfg;
    cfg.file = f.path;
    cfg.connected_only = true;
    Run r = invoke(cfg, run_compute);
    REQUIRE(r.code == 0);
    CHECK(lines_of(r.out).size() == 2);  // header + P_3 only
}

TEST_CASE("compute from a file reports malformed lines") {
    TempFile f("A_\nnot-a-graph(\n");
    RunConfig cfg;
    cfg.file = f.path;
    Run r = invoke(cfg, run_compute);
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("compute output is identical across worker counts") {
    std::ostringstream corpus;
    for (const Graph& g : enumerate_graphs(6, false)) corpus << graph6_encode(g) << '\n';
    TempFile f(corpus.str());

    RunConfig one;
    one.file = f.path;
    one.workers = 1;
    RunConfig four = one;
    four.workers = 4;
    Run a = invoke(one, run_compute), b = invoke(four, run_compute);
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("compute emits parseable json lines with traces") {
    RunConfig cfg;
    cfg.family = "path:5";
    cfg.format = RunConfig::Format::JsonLines;
    cfg.with_trace = true;
    Run r = invoke(cfg, run_compute);
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(lines_of(r.out)[0]);
    CHECK(j["n"] == 5);
    CHECK(j["ppt"] == 2);
    CHECK(j["PPT"] == 4);
    CHECK(j["trace"]["complete"] == true);
    CHECK(j["trace"]["steps"].size() == 3);  // {2}, {1,2,3}, everything
}

TEST_CASE("verify subcommand emits one record and the right exit code") {
    RunConfig cfg;
    cfg.theorem = "extreme-n-minus-1";
    cfg.verify_n_max = 5;
    Run r = invoke(cfg, run_verify);
    CHECK(r.code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 1);
    CHECK(field(ls[0], 0) == "extreme-n-minus-1");
    CHECK(field(ls[0], 3) == "pass");

    RunConfig bad;
    bad.theorem = "no-such";
    CHECK(invoke(bad, run_verify).code == 2);
}

TEST_CASE("ng-scan summaries, extremal listing, exit codes") {
    RunConfig cfg;
    cfg.n_min = 1;
    cfg.n_max = 5;
    cfg.list_extremal = true;
    Run r = invoke(cfg, run_ng_scan);
    REQUIRE(r.code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() >= 6);
    // P_4 is extremal at n = 4
    bool saw_p4 = false;
    for (const auto& l : ls)
        if (l.rfind("extremal\t4", 0) == 0) saw_p4 = true;
    CHECK(saw_p4);
    for (const auto& l : ls)
        if (!l.empty() && l[0] != '#' && l.rfind("extremal", 0) != 0) CHECK(field(l, 4) == "-");
}

TEST_CASE("ng-scan accepts a piped corpus") {
    TempFile f(graph6_encode(empty_graph(5)) + "\n");
    RunConfig cfg;
    cfg.file = f.path;
    Run r = invoke(cfg, run_ng_scan);
    REQUIRE(r.code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(field(ls[1], 0) == "5");
    CHECK(field(ls[1], 2) == "1");  // 0 + ppt(K_5) = 1
}

TEST_CASE("families emits graph6 lines") {
    RunConfig cfg;
    cfg.family = "spider:1,1,4";
    Run r = invoke(cfg, run_families);
    REQUIRE(r.code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 1);
    Graph g = graph6_decode(ls[0]);
    CHECK(g.order() == 7);
    CHECK(g.edge_count() == 6);

    RunConfig ng;
    ng.family = "ng:9..11";
    auto rng_run = invoke(ng, run_families);
    CHECK(lines_of(rng_run.out).size() == 3);

    RunConfig sd;
    sd.family = "subdiv-decrease:7";
    sd.subdivided = true;
    auto rsd = invoke(sd, run_families);
    CHECK(graph6_decode(lines_of(rsd.out)[0]).order() == 14);

    RunConfig bad;
    bad.family = "wat:1";
    CHECK(invoke(bad, run_families).code == 2);
}

TEST_SUITE_END();
