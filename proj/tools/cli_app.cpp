#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "vsdo/dimacs.hpp"
#include "vsdo/generate.hpp"
#include "vsdo/oracle.hpp"
#include "vsdo/report.hpp"
#include "vsdo/serialize.hpp"
#include "vsdo/verify.hpp"

namespace vsdo::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt(vsdo::Distance d) {
    return d.is_finite() ? std::to_string(d.value()) : std::string("INF");
}

VertexId to_zero_based(std::uint64_t v, std::uint64_t n, const char* what) {
    if (v < 1 || v > n)
        throw std::invalid_argument(std::string(what) + " out of range [1, " +
                                    std::to_string(n) + "]");
    return VertexId(v - 1);
}

struct BuildResult {
    Oracle oracle;
    double build_ms = 0;
    DimacsGraph input;
};

BuildResult timed_build(const std::string& graph_path, std::uint64_t src1,
                        double eps, const std::string& provider) {
    DimacsGraph input = load_dimacs_file(graph_path);
    const VertexId s = to_zero_based(src1, input.graph.order(), "source");
    const auto start = Clock::now();
    Oracle oracle = Oracle::build(input.graph, s, eps, parse_sz_provider(provider));
    const double ms = ms_since(start);
    return BuildResult{std::move(oracle), ms, std::move(input)};
}

RunReport base_report(const std::string& command, const BuildResult& b,
                      std::uint64_t src1, double eps, const std::string& provider) {
    RunReport rep;
    rep.command = command;
    rep.n = b.input.graph.order();
    rep.m = b.input.graph.edge_count();
    rep.max_weight = b.input.graph.max_weight();
    rep.source = std::uint32_t(src1);
    rep.eps = eps;
    rep.provider = provider;
    rep.build_ms = b.build_ms;
    rep.oracle_bytes = serialize_oracle(b.oracle).size();
    rep.node_count = b.oracle.nodes().size();
    rep.depth = b.oracle.depth();
    rep.detour_entries = b.oracle.total_detour_entries();
    return rep;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"single-source vertex-fault distance oracle"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a seeded DIMACS instance");
    std::string gen_type = "gnp", gen_out;
    std::uint32_t gen_n = 0;
    std::uint64_t gen_m = 0, gen_seed = 0;
    std::uint64_t gen_maxw = 10;
    gen->add_option("--type", gen_type, "gnp | layered | path-shortcut | grid");
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--m", gen_m, "edge count (0 = family default)");
    gen->add_option("--maxw", gen_maxw, "maximum edge weight");
    gen->add_option("--seed", gen_seed, "rng seed");
    gen->add_option("-o,--output", gen_out, "output .gr file")->required();

    // build
    auto* build = app.add_subcommand("build", "build and persist an oracle");
    std::string build_graph, build_out, build_provider = "exact";
    std::uint64_t build_src = 1;
    double build_eps = 0;
    build->add_option("-g,--graph", build_graph, "input .gr file")->required();
    build->add_option("-s,--source", build_src, "source vertex (1-indexed)");
    build->add_option("--eps", build_eps, "approximation parameter in (0,1]")->required();
    build->add_option("--sz-provider", build_provider, "exact | fast");
    build->add_option("-o,--output", build_out, "output oracle file")->required();

    // query
    auto* query = app.add_subcommand("query", "answer one fault/target query");
    std::string query_oracle;
    std::uint64_t query_x = 0, query_t = 0;
    query->add_option("-o,--oracle", query_oracle, "oracle file")->required();
    query->add_option("-x,--fault", query_x, "failed vertex (1-indexed)")->required();
    query->add_option("-t,--target", query_t, "target vertex (1-indexed)")->required();

    // batch
    auto* batch = app.add_subcommand("batch", "answer tab-separated query pairs");
    std::string batch_oracle, batch_file;
    batch->add_option("-o,--oracle", batch_oracle, "oracle file")->required();
    batch->add_option("-q,--queries", batch_file, "file of lines: x<TAB>t")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "compare against brute force on all pairs");
    std::string verify_graph, verify_provider = "exact";
    std::uint64_t verify_src = 1, verify_maxn = 300;
    double verify_eps = 0;
    verify->add_option("-g,--graph", verify_graph, "input .gr file")->required();
    verify->add_option("-s,--source", verify_src, "source vertex (1-indexed)");
    verify->add_option("--eps", verify_eps, "approximation parameter")->required();
    verify->add_option("--sz-provider", verify_provider, "exact | fast");
    verify->add_option("--max-n", verify_maxn, "refuse graphs larger than this");

    // stats
    auto* stats = app.add_subcommand("stats", "report sizes of a persisted oracle");
    std::string stats_oracle;
    stats->add_option("-o,--oracle", stats_oracle, "oracle file")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "time build and random queries");
    std::string bench_graph, bench_provider = "exact";
    std::uint64_t bench_src = 1, bench_queries = 1000, bench_seed = 0;
    double bench_eps = 0;
    bench->add_option("-g,--graph", bench_graph, "input .gr file")->required();
    bench->add_option("-s,--source", bench_src, "source vertex (1-indexed)");
    bench->add_option("--eps", bench_eps, "approximation parameter")->required();
    bench->add_option("--queries", bench_queries, "number of random queries");
    bench->add_option("--seed", bench_seed, "rng seed for query pairs");
    bench->add_option("--sz-provider", bench_provider, "exact | fast");

    std::vector<const char*> argv;
    argv.push_back("vsdo");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(int(argv.size()), argv.data());

        if (*gen) {
            GenParams params;
            params.family = parse_graph_family(gen_type);
            params.n = gen_n;
            params.m = gen_m;
            params.max_weight = gen_maxw;
            params.seed = gen_seed;
            Digraph g = generate_graph(params);
            std::ostringstream comment;
            comment << "family=" << to_string(params.family) << " n=" << params.n
                    << " m=" << g.edge_count() << " maxw=" << params.max_weight
                    << " seed=" << params.seed;
            save_dimacs_file(g, gen_out, comment.str());
            return 0;
        }

        if (*build) {
            BuildResult b = timed_build(build_graph, build_src, build_eps, build_provider);
            save_oracle_file(b.oracle, build_out);
            out << base_report("build", b, build_src, build_eps, build_provider).to_json()
                << "\n";
            return 0;
        }

        if (*query) {
            Oracle o = load_oracle_file(query_oracle);
            const VertexId x = to_zero_based(query_x, o.input_order(), "fault");
            const VertexId t = to_zero_based(query_t, o.input_order(), "target");
            out << fmt(o.query(x, t)) << "\n";
            return 0;
        }

        if (*batch) {
            Oracle o = load_oracle_file(batch_oracle);
            std::ifstream qs(batch_file);
            if (!qs) throw std::runtime_error("cannot open queries: " + batch_file);
            std::string line;
            std::size_t lineno = 0;
            while (std::getline(qs, line)) {
                ++lineno;
                if (line.empty()) continue;
                std::istringstream ls(line);
                std::uint64_t x1, t1;
                if (!(ls >> x1 >> t1))
                    throw std::runtime_error("bad query line " + std::to_string(lineno));
                const VertexId x = to_zero_based(x1, o.input_order(), "fault");
                const VertexId t = to_zero_based(t1, o.input_order(), "target");
                out << x1 << "\t" << t1 << "\t" << fmt(o.query(x, t)) << "\n";
            }
            return 0;
        }

        if (*verify) {
            DimacsGraph in = load_dimacs_file(verify_graph);
            if (in.graph.order() > verify_maxn)
                throw CLI::ValidationError(
                    "verify", "graph larger than --max-n (brute force too slow)");
            const VertexId s = to_zero_based(verify_src, in.graph.order(), "source");
            const auto start = Clock::now();
            Oracle o = Oracle::build(in.graph, s, verify_eps,
                                     parse_sz_provider(verify_provider));
            BuildResult b{std::move(o), ms_since(start), std::move(in)};
            VerifyOutcome vo = verify_all_pairs(b.oracle, b.input.graph, s, verify_eps);
            RunReport rep = base_report("verify", b, verify_src, verify_eps, verify_provider);
            rep.pairs = vo.pairs;
            rep.violations = vo.violations;
            rep.max_ratio = vo.max_ratio;
            out << rep.to_json() << "\n";
            return vo.violations == 0 ? 0 : 1;
        }

        if (*stats) {
            Oracle o = load_oracle_file(stats_oracle);
            std::map<std::uint32_t, std::uint64_t> verts_per_depth;
            std::uint64_t leaves = 0;
            for (const auto& [id, node] : o.nodes()) {
                verts_per_depth[std::uint32_t(std::bit_width(id) - 1)] += node.size();
                if (node.leaf) ++leaves;
            }
            nlohmann::ordered_json j;
            j["n"] = o.input_order();
            j["m"] = o.input_edges();
            j["max_weight"] = o.input_max_weight();
            j["eps"] = o.config().eps;
            j["provider"] = to_string(o.config().provider);
            j["nodes"] = o.nodes().size();
            j["leaves"] = leaves;
            j["depth"] = o.depth();
            j["detour_entries"] = o.total_detour_entries();
            j["oracle_bytes"] = serialize_oracle(o).size();
            j["vertices_per_depth"] = nlohmann::ordered_json::array();
            for (const auto& [d, total] : verts_per_depth)
                j["vertices_per_depth"].push_back(total);
            out << j.dump() << "\n";
            return 0;
        }

        if (*bench) {
            BuildResult b = timed_build(bench_graph, bench_src, bench_eps, bench_provider);
            const std::uint64_t n = b.input.graph.order();
            const VertexId s = to_zero_based(bench_src, n, "source");
            std::mt19937_64 rng(bench_seed);
            std::vector<double> us;
            us.reserve(bench_queries);
            for (std::uint64_t i = 0; i < bench_queries; ++i) {
                VertexId x = VertexId(rng() % n);
                while (x == s) x = VertexId(rng() % n);
                const VertexId t = VertexId(rng() % n);
                const auto q0 = Clock::now();
                volatile std::uint64_t sink = b.oracle.query(x, t).raw();
                (void)sink;
                us.push_back(ms_since(q0) * 1000.0);
            }
            std::sort(us.begin(), us.end());
            RunReport rep = base_report("bench", b, bench_src, bench_eps, bench_provider);
            if (!us.empty()) {
                rep.query_p50_us = us[us.size() / 2];
                rep.query_p99_us = us[std::min(us.size() - 1, us.size() * 99 / 100)];
            }
            out << rep.to_json() << "\n";
            return 0;
        }

        err << "no subcommand selected\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace vsdo::cli
