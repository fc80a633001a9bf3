#include "vsdo/pathfault.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

#include "vsdo/shortest_paths.hpp"

namespace vsdo {

SzProvider parse_sz_provider(std::string_view name) {
    if (name == "exact") return SzProvider::exact;
    if (name == "fast") return SzProvider::fast;
    throw std::invalid_argument("unknown sz provider: " + std::string(name));
}

const char* to_string(SzProvider p) {
    return p == SzProvider::exact ? "exact" : "fast";
}

Distance detour_query_at(const DetourIndex& idx, std::uint32_t fault_pos,
                         VertexId target) {
    const std::uint32_t top = idx.level_count - 1;
    Distance best = Distance::unreachable();
    for (std::uint32_t level = 0; level <= top; ++level) {
        const std::uint32_t j = fault_pos >> (top - level);
        best = min(best, idx.lookup(level, static_cast<std::int64_t>(j) - 1, target));
    }
    return best;
}

Distance detour_query(const DetourIndex& idx, const CentroidSplit& split,
                      VertexId fault, VertexId target) {
    const std::uint32_t fpos = split.path_pos[fault];
    if (fpos == kNoPos)
        throw std::invalid_argument("detour_query: fault not on the root path");
    if (fpos == 0)
        throw std::invalid_argument("detour_query: the source cannot fail");
    if (target == split.source()) return Distance::finite(0);
    if (target == fault) return Distance::unreachable();  // entries for the
    // fault's own target describe paths through it
    return detour_query_at(idx, fpos, target);
}

namespace {

std::vector<Distance> exact_replacement_table(const Digraph& g,
                                              const CentroidSplit& split) {
    const std::size_t p = split.root_path.size();
    const VertexId s = split.source();
    const VertexId z = split.centroid;
    std::vector<Distance> table(p, Distance::unreachable());
    for (std::size_t f = 1; f < p; ++f)
        table[f] = dijkstra_avoiding(g, s, split.root_path[f]).dist[z];
    return table;
}

// Fast provider. Detour side: detour_query(fault, z). Rejoin side: every
// index entry (len, branch) recorded for a root-path target c yields the
// value len + distT(c, z), valid for every fault strictly between branch and
// c; a sweep over fault positions with an expiring min-heap takes the
// per-fault minimum.
std::vector<Distance> fast_replacement_table(const SpTree& t,
                                             const CentroidSplit& split,
                                             const DetourIndex& idx) {
    const std::size_t p = split.root_path.size();
    const VertexId z = split.centroid;
    const std::uint64_t dist_to_z = t.dist[z].value();
    std::vector<Distance> table(p, Distance::unreachable());

    struct Candidate {
        std::uint32_t start, end;  // fault positions covered, inclusive
        std::uint64_t value;
    };
    std::vector<Candidate> cands;
    for (std::uint32_t level = 0; level < idx.level_count; ++level) {
        for (std::uint32_t c = 0; c < p; ++c) {
            const VertexId vc = split.root_path[c];
            const std::uint64_t tail = dist_to_z - t.dist[vc].value();
            for (const RoundEntry& e : idx.entries[level][vc]) {
                if (e.branch == vc) continue;  // seed entry
                const std::uint32_t b = split.path_pos[e.branch];
                assert(b != kNoPos && b < c);
                if (b + 1 > c - 1) continue;  // no fault strictly between
                cands.push_back({b + 1, c - 1, e.length + tail});
            }
        }
    }
    std::sort(cands.begin(), cands.end(),
              [](const Candidate& a, const Candidate& b) { return a.start < b.start; });

    struct HeapItem {
        std::uint64_t value;
        std::uint32_t end;
        bool operator>(const HeapItem& o) const { return value > o.value; }
    };
    std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> live;
    std::size_t next = 0;
    for (std::uint32_t f = 1; f < p; ++f) {
        while (next < cands.size() && cands[next].start <= f) {
            if (cands[next].end >= f)
                live.push({cands[next].value, cands[next].end});
            ++next;
        }
        while (!live.empty() && live.top().end < f) live.pop();
        Distance best = detour_query(idx, split, split.root_path[f], z);
        if (!live.empty()) best = min(best, Distance::finite(live.top().value));
        table[f] = best;
    }
    return table;
}

}  // namespace

std::vector<Distance> build_centroid_replacement_table(
    const Digraph& g, const SpTree& t, const CentroidSplit& split,
    SzProvider provider, const DetourIndex* detours) {
    if (provider == SzProvider::exact) return exact_replacement_table(g, split);
    if (!detours)
        throw std::invalid_argument(
            "build_centroid_replacement_table: fast provider needs the detour index");
    return fast_replacement_table(t, split, *detours);
}

Distance trunk_fault_query(const DetourIndex& idx, const CentroidSplit& split,
                           const SpTree& t, const std::vector<Distance>& replacement,
                           VertexId fault, VertexId target) {
    const std::uint32_t fpos = split.path_pos[fault];
    if (fpos == kNoPos || fpos == 0)
        throw std::invalid_argument("trunk_fault_query: bad fault vertex");
    if (target == split.source()) return Distance::finite(0);

    Distance best = detour_query(idx, split, fault, target);
    const Distance dz = t.dist[split.centroid];
    const Distance dt = t.dist[target];
    if (dt.is_finite()) {
        assert(dz.is_finite() && dt.value() >= dz.value());
        best = min(best, replacement[fpos] + Distance::finite(dt.value() - dz.value()));
    }
    return best;
}

}  // namespace vsdo
