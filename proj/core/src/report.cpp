#include "vsdo/report.hpp"

#include <json.hpp>

namespace vsdo {

std::string RunReport::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["graph"] = {{"n", n}, {"m", m}, {"max_weight", max_weight}};
    j["source"] = source;
    j["eps"] = eps;
    j["provider"] = provider;
    if (build_ms) j["build_ms"] = *build_ms;
    if (oracle_bytes) j["oracle_bytes"] = *oracle_bytes;
    if (node_count) j["nodes"] = *node_count;
    if (depth) j["depth"] = *depth;
    if (detour_entries) j["detour_entries"] = *detour_entries;
    if (query_p50_us) j["query_p50_us"] = *query_p50_us;
    if (query_p99_us) j["query_p99_us"] = *query_p99_us;
    if (pairs) j["pairs"] = *pairs;
    if (violations) j["violations"] = *violations;
    if (max_ratio) j["max_ratio"] = *max_ratio;
    return j.dump();
}

}  // namespace vsdo
