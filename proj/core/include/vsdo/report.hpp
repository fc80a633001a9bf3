#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace vsdo {

// Machine-readable run record, emitted as one JSON line on stdout by the
// build/verify/bench commands. A successful verify always reports zero
// violations.
struct RunReport {
    std::string command;
    std::uint64_t n = 0, m = 0;
    std::uint64_t max_weight = 0;
    std::uint32_t source = 0;  // 1-indexed, as on the command line
    double eps = 0.0;
    std::string provider;

    std::optional<double> build_ms;
    std::optional<std::uint64_t> oracle_bytes;
    std::optional<std::uint64_t> node_count;
    std::optional<std::uint32_t> depth;
    std::optional<std::uint64_t> detour_entries;
    std::optional<double> query_p50_us;
    std::optional<double> query_p99_us;
    std::optional<std::uint64_t> pairs;
    std::optional<std::uint64_t> violations;
    std::optional<double> max_ratio;

    std::string to_json() const;
};

}  // namespace vsdo
