#include "vsdo/dimacs.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace vsdo {

DimacsGraph parse_dimacs(std::istream& in) {
    DimacsGraph result;
    bool have_problem = false;
    std::uint64_t arcs = 0;
    std::string line;
    std::size_t lineno = 0;

    auto fail = [&](const std::string& what) {
        throw FormatError("dimacs line " + std::to_string(lineno) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag.empty()) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_problem) fail("duplicate problem line");
            std::string kind;
            if (!(ls >> kind >> result.declared_n >> result.declared_m) || kind != "sp")
                fail("expected 'p sp <n> <m>'");
            result.graph = Digraph(result.declared_n);
            have_problem = true;
            continue;
        }
        if (tag == "a") {
            if (!have_problem) fail("arc before problem line");
            std::uint64_t u, v;
            std::int64_t w;
            if (!(ls >> u >> v >> w)) fail("expected 'a <u> <v> <w>'");
            if (u < 1 || u > result.declared_n || v < 1 || v > result.declared_n)
                fail("endpoint out of range");
            if (w < 1) fail("edge weight must be >= 1");
            ++arcs;
            if (u != v)
                result.graph.add_edge(VertexId(u - 1), VertexId(v - 1), Weight(w));
            continue;
        }
        fail("unknown line type '" + tag + "'");
    }
    if (!have_problem) throw FormatError("dimacs: missing problem line");
    if (arcs != result.declared_m)
        throw FormatError("dimacs: declared m=" + std::to_string(result.declared_m) +
                          " but found " + std::to_string(arcs) + " arcs");
    return result;
}

void write_dimacs(const Digraph& g, std::ostream& out, const std::string& comment) {
    if (!comment.empty()) out << "c " << comment << "\n";
    out << "p sp " << g.order() << " " << g.edge_count() << "\n";
    for (VertexId u = 0; u < g.order(); ++u)
        for (const Edge& e : g.out(u))
            out << "a " << (u + 1) << " " << (e.to + 1) << " " << e.w << "\n";
}

DimacsGraph load_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return parse_dimacs(in);
}

void save_dimacs_file(const Digraph& g, const std::string& path,
                      const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_dimacs(g, out, comment);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace vsdo
