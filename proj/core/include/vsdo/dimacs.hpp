#pragma once

#include <iosfwd>
#include <string>

#include "vsdo/digraph.hpp"
#include "vsdo/serialize.hpp"

namespace vsdo {

struct DimacsGraph {
    Digraph graph;
    std::uint64_t declared_n = 0;
    std::uint64_t declared_m = 0;
};

// DIMACS shortest-path format: "c ..." comments, one "p sp <n> <m>" line,
// then m lines "a <u> <v> <w>" with 1-indexed endpoints and weight >= 1.
// Self-loop lines count toward m but add no edge. Throws FormatError on
// malformed lines, out-of-range endpoints, weight < 1, or an arc-count
// mismatch with the declared m.
DimacsGraph parse_dimacs(std::istream& in);

void write_dimacs(const Digraph& g, std::ostream& out,
                  const std::string& comment = {});

DimacsGraph load_dimacs_file(const std::string& path);
void save_dimacs_file(const Digraph& g, const std::string& path,
                      const std::string& comment = {});

}  // namespace vsdo
