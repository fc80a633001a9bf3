#include "vsdo/verify.hpp"

#include <algorithm>

namespace vsdo {

bool within_contract(Distance answer, Distance exact, double eps) {
    if (!exact.is_finite()) return !answer.is_finite();
    if (!answer.is_finite()) return false;
    if (answer < exact) return false;
    return static_cast<long double>(answer.value()) <=
           (1.0L + static_cast<long double>(eps)) *
               static_cast<long double>(exact.value());
}

VerifyOutcome verify_all_pairs(const Oracle& oracle, const Digraph& g, VertexId s,
                               double eps) {
    const std::size_t n = g.order();
    baseline::SsrpTable exact = baseline::exact_ssrp(g, s);
    VerifyOutcome out;
    for (VertexId x = 0; x < n; ++x) {
        if (x == s) continue;
        for (VertexId t = 0; t < n; ++t) {
            const Distance got = oracle.query(x, t);
            const Distance want = exact.at(x, t);
            ++out.pairs;
            if (!within_contract(got, want, eps)) {
                ++out.violations;
                continue;
            }
            if (want.is_finite() && want.value() > 0)
                out.max_ratio = std::max(
                    out.max_ratio, double(got.value()) / double(want.value()));
        }
    }
    return out;
}

}  // namespace vsdo
