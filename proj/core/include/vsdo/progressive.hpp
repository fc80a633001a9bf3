#pragma once

#include <cstdint>
#include <vector>

#include "vsdo/digraph.hpp"
#include "vsdo/sp_tree.hpp"
#include "vsdo/types.hpp"

namespace vsdo {

// One improvement record for a vertex at one level: after round `round` the
// best known detour (a path that leaves the root path at `branch` and never
// touches it again before its endpoint) has length `length`.
struct RoundEntry {
    std::uint32_t round;
    std::uint64_t length;
    VertexId branch;
};

// Half-open dyadic grid over root-path positions, padded to a power of two
// and clipped to [0, path_len).
struct DyadicInterval {
    std::uint32_t level = 0;
    std::uint32_t round = 0;
    std::uint32_t lo = 0;
    std::uint32_t hi = 0;  // inclusive; meaningless when empty
    bool empty = true;
};

DyadicInterval dyadic_interval(std::uint32_t level, std::uint32_t round,
                               std::uint32_t path_len);

// Round whose interval contains the given position at the given level.
std::uint32_t dyadic_round_of(std::uint32_t level, std::uint32_t pos,
                              std::uint32_t path_len);

// Exact tiling of positions [0, b-1] by grid intervals; at most ceil(log2 b)
// of them for b >= 2, exactly one for b = 1. Test/cross-check helper.
std::vector<DyadicInterval> dyadic_prefix_cover(std::uint32_t b,
                                                std::uint32_t path_len);

// Fixed-point activation threshold: candidate must beat the current value by
// a factor strictly greater than (1 + eps_fixed/2^32). Exact 128-bit integer
// comparison, shared by the builder and the test-side predicate.
inline constexpr std::uint64_t kRoundEpsOne = 1ull << 32;

inline bool improves_enough(Distance cand, Distance cur, std::uint64_t round_eps_fixed) {
    if (!cand.is_finite()) return false;
    if (!cur.is_finite()) return true;
    using u128 = unsigned __int128;
    return u128(cand.value()) * (kRoundEpsOne + round_eps_fixed) <
           u128(cur.value()) * kRoundEpsOne;
}

// Per-level, per-vertex logs of strict detour-length improvements over the
// progressive rounds. The serialized heart of the trunk-fault oracle and the
// source of the branch->rejoin shortcut edges.
class DetourIndex {
public:
    std::uint32_t path_len = 0;
    std::uint32_t padded_len = 1;
    std::uint32_t level_count = 1;  // levels 0 .. ceil_log2(path_len)
    double round_eps = 0.0;
    std::uint64_t round_eps_fixed = 0;
    // entries[level][vertex], ascending by round, lengths non-increasing.
    std::vector<std::vector<std::vector<RoundEntry>>> entries;

    // Value recorded after the given round: length of the last entry with
    // round <= r, Unreachable if none (including r = -1).
    Distance lookup(std::uint32_t level, std::int64_t round, VertexId v) const;

    std::size_t total_entries() const;
};

// Runs the progressive rounds over every level of the dyadic grid on the
// root path. Per round j at level i, the interval's vertices are re-seeded
// with their tree distance; any other vertex enters the heap only when its
// best value improves by a factor exceeding (1+eps); every heap insertion
// appends a RoundEntry and in-heap improvements overwrite the same-round
// entry. Root-path edges are never relaxed, positions <= interval end accept
// no relaxation, positions beyond it expand no edges. Levels are mutually
// independent (rounds within a level are not); the builder runs them
// sequentially with per-level scratch.
DetourIndex build_detour_index(const Digraph& g, const SpTree& t,
                               const CentroidSplit& split, double round_eps,
                               std::uint64_t round_eps_fixed);

}  // namespace vsdo
