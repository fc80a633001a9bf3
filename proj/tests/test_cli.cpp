#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"
#include "support/oracles.hpp"
#include "vsdo/dimacs.hpp"

using namespace vsdo;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = vsdo::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("vsdo_cli_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::vector<std::tuple<VertexId, VertexId, Weight>> edge_multiset(const Digraph& g) {
    std::vector<std::tuple<VertexId, VertexId, Weight>> edges;
    for (VertexId u = 0; u < g.order(); ++u)
        for (const Edge& e : g.out(u)) edges.emplace_back(u, e.to, e.w);
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace

TEST_CASE("dimacs: minimal file") {
    std::istringstream in("p sp 2 1\na 1 2 5\n");
    DimacsGraph d = parse_dimacs(in);
    CHECK(d.graph.order() == 2);
    REQUIRE(d.graph.out(0).size() == 1);
    CHECK(d.graph.out(0)[0].to == 1);
    CHECK(d.graph.out(0)[0].w == 5);
}

TEST_CASE("dimacs: malformed inputs are rejected") {
    auto expect_reject = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_dimacs(in), FormatError);
    };
    expect_reject("p sp 2 1\na 1 3 2\n");      // endpoint out of range
    expect_reject("p sp 2 1\na 1 2 0\n");      // nonpositive weight
    expect_reject("p sp 2 2\na 1 2 1\n");      // arc count mismatch
    expect_reject("p sp 2 1\nq 1 2 1\n");      // unknown line
    expect_reject("a 1 2 1\n");                // arc before problem line
    expect_reject("c only a comment\n");       // no problem line
    expect_reject("p sp 2 1\na 1 2\n");        // short arc line
}

TEST_CASE("dimacs: comments and self-loop arcs are tolerated") {
    std::istringstream in("c hello\np sp 3 2\nc mid\na 1 2 4\na 2 2 9\n");
    DimacsGraph d = parse_dimacs(in);
    CHECK(d.graph.edge_count() == 1);  // the self-loop counts toward m only
}

TEST_CASE("dimacs writer round-trips the edge multiset") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Digraph g = testsup::make_instance(20, 80, 15, 3000 + seed,
                                           GraphFamily::gnp);
        std::ostringstream out;
        write_dimacs(g, out, "round trip");
        std::istringstream in(out.str());
        DimacsGraph back = parse_dimacs(in);
        CHECK(edge_multiset(g) == edge_multiset(back.graph));
    }
}

TEST_CASE("generators are deterministic per seed") {
    TempDir dir;
    auto a = run_cli({"gen", "--type", "grid", "--n", "30", "--maxw", "7",
                      "--seed", "5", "-o", dir.file("a.gr")});
    auto b = run_cli({"gen", "--type", "grid", "--n", "30", "--maxw", "7",
                      "--seed", "5", "-o", dir.file("b.gr")});
    auto c = run_cli({"gen", "--type", "grid", "--n", "30", "--maxw", "7",
                      "--seed", "6", "-o", dir.file("c.gr")});
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    CHECK(c.code == 0);
    auto slurp = [](const std::string& p) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    CHECK(slurp(dir.file("a.gr")) == slurp(dir.file("b.gr")));
    CHECK(slurp(dir.file("a.gr")) != slurp(dir.file("c.gr")));
}

TEST_CASE("path-shortcut family grows a long trunk") {
    Digraph g = testsup::make_instance(64, 256, 10, 4, GraphFamily::path_shortcut);
    SpTree t = build_spt(g, 0);
    CentroidSplit split = centroid_bipartition(t);
    CHECK(split.root_path.size() >= 16);
}

TEST_CASE("end-to-end: gen, build, query, batch, verify, stats") {
    TempDir dir;
    REQUIRE(run_cli({"gen", "--type", "path-shortcut", "--n", "36", "--m", "140",
                     "--maxw", "9", "--seed", "11", "-o", dir.file("g.gr")})
                .code == 0);
    auto built = run_cli({"build", "-g", dir.file("g.gr"), "-s", "1", "--eps",
                          "0.5", "-o", dir.file("g.vsdo")});
    REQUIRE(built.code == 0);
    auto report = nlohmann::json::parse(built.out);
    CHECK(report["graph"]["n"] == 36);
    CHECK(report["violations"].is_null());
    CHECK(report["oracle_bytes"].get<std::uint64_t>() > 0);

    auto one = run_cli({"query", "-o", dir.file("g.vsdo"), "-x", "2", "-t", "30"});
    CHECK(one.code == 0);

    auto same = run_cli({"query", "-o", dir.file("g.vsdo"), "-x", "7", "-t", "7"});
    CHECK(same.code == 0);
    CHECK(same.out == "INF\n");

    {
        std::ofstream qs(dir.file("q.tsv"));
        qs << "2\t30\n7\t7\n5\t1\n";
    }
    auto batch = run_cli({"batch", "-o", dir.file("g.vsdo"), "-q", dir.file("q.tsv")});
    REQUIRE(batch.code == 0);
    std::istringstream lines(batch.out);
    std::string l1, l2, l3;
    std::getline(lines, l1);
    std::getline(lines, l2);
    std::getline(lines, l3);
    CHECK(l1 == "2\t30\t" + one.out.substr(0, one.out.size() - 1));
    CHECK(l2 == "7\t7\tINF");
    CHECK(l3 == "5\t1\t0");

    auto verified = run_cli({"verify", "-g", dir.file("g.gr"), "-s", "1", "--eps",
                             "0.5"});
    CHECK(verified.code == 0);
    auto vr = nlohmann::json::parse(verified.out);
    CHECK(vr["violations"] == 0);

    auto st = run_cli({"stats", "-o", dir.file("g.vsdo")});
    CHECK(st.code == 0);
    auto sj = nlohmann::json::parse(st.out);
    CHECK(sj["n"] == 36);
    CHECK(sj["nodes"].get<std::uint64_t>() >= 3);
}

TEST_CASE("verify on the three-vertex example: zero violations, ratio one") {
    TempDir dir;
    {
        std::ofstream g(dir.file("tri.gr"));
        g << "p sp 3 3\na 1 2 1\na 2 3 1\na 1 3 5\n";
    }
    auto verified = run_cli({"verify", "-g", dir.file("tri.gr"), "-s", "1",
                             "--eps", "0.5"});
    CHECK(verified.code == 0);
    auto vr = nlohmann::json::parse(verified.out);
    CHECK(vr["violations"] == 0);
    CHECK(vr["max_ratio"] == 1.0);
}

TEST_CASE("usage errors exit with code 2") {
    TempDir dir;
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"build", "-g", "missing.gr", "--eps", "0.5", "-o",
                   dir.file("x.vsdo")})
              .code == 2);
    CHECK(run_cli({"query", "-o", "missing.vsdo", "-x", "1", "-t", "2"}).code == 2);

    // verify refuses instances beyond the brute-force cap
    REQUIRE(run_cli({"gen", "--type", "gnp", "--n", "400", "-o", dir.file("big.gr")})
                .code == 0);
    CHECK(run_cli({"verify", "-g", dir.file("big.gr"), "-s", "1", "--eps", "0.5"})
              .code == 2);

    // querying the source as the fault is a usage error
    REQUIRE(run_cli({"gen", "--type", "gnp", "--n", "10", "--seed", "2", "-o",
                     dir.file("s.gr")})
                .code == 0);
    REQUIRE(run_cli({"build", "-g", dir.file("s.gr"), "-s", "1", "--eps", "1.0",
                     "-o", dir.file("s.vsdo")})
                .code == 0);
    CHECK(run_cli({"query", "-o", dir.file("s.vsdo"), "-x", "1", "-t", "2"}).code ==
          2);
    CHECK(run_cli({"query", "-o", dir.file("s.vsdo"), "-x", "99", "-t", "2"}).code ==
          2);
}

TEST_CASE("bench emits query timings") {
    TempDir dir;
    REQUIRE(run_cli({"gen", "--type", "gnp", "--n", "50", "--seed", "8", "-o",
                     dir.file("b.gr")})
                .code == 0);
    auto bench = run_cli({"bench", "-g", dir.file("b.gr"), "-s", "1", "--eps",
                          "0.5", "--queries", "64", "--seed", "3"});
    REQUIRE(bench.code == 0);
    auto bj = nlohmann::json::parse(bench.out);
    CHECK(bj["query_p50_us"].is_number());
    CHECK(bj["query_p99_us"].is_number());
}
