#pragma once

#include "vsdo/baseline.hpp"
#include "vsdo/oracle.hpp"

namespace vsdo {

// answer must lie in [exact, (1+eps)*exact], with Unreachable agreeing.
bool within_contract(Distance answer, Distance exact, double eps);

struct VerifyOutcome {
    std::uint64_t pairs = 0;
    std::uint64_t violations = 0;
    double max_ratio = 1.0;  // over finite pairs
};

// Compares the oracle against the brute-force replacement table on every
// (fault, target) pair.
VerifyOutcome verify_all_pairs(const Oracle& oracle, const Digraph& g, VertexId s,
                               double eps);

}  // namespace vsdo
