#include "vsdo/progressive.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <queue>
#include <stdexcept>

namespace vsdo {

DyadicInterval dyadic_interval(std::uint32_t level, std::uint32_t round,
                               std::uint32_t path_len) {
    const std::uint32_t levels = ceil_log2(path_len) + 1;
    if (level >= levels || round >= (1u << level))
        throw std::out_of_range("dyadic_interval: bad (level, round)");
    const std::uint32_t block = (1u << (levels - 1)) >> level;
    DyadicInterval iv;
    iv.level = level;
    iv.round = round;
    iv.lo = round * block;
    if (iv.lo >= path_len) return iv;  // empty (clipped away)
    iv.hi = std::min(iv.lo + block, path_len) - 1;
    iv.empty = false;
    return iv;
}

std::uint32_t dyadic_round_of(std::uint32_t level, std::uint32_t pos,
                              std::uint32_t path_len) {
    const std::uint32_t top = ceil_log2(path_len);
    if (level > top || pos >= path_len)
        throw std::out_of_range("dyadic_round_of: bad (level, pos)");
    return pos >> (top - level);
}

std::vector<DyadicInterval> dyadic_prefix_cover(std::uint32_t b,
                                                std::uint32_t path_len) {
    if (b == 0 || b > path_len)
        throw std::invalid_argument("dyadic_prefix_cover: b out of range");
    const std::uint32_t top = ceil_log2(path_len);
    std::vector<DyadicInterval> cover;
    std::uint32_t a = 0;
    while (a < b) {
        // Largest grid-aligned block starting at a that stays inside [0, b).
        std::uint32_t k = a == 0 ? top : std::min<std::uint32_t>(top, std::countr_zero(a));
        while ((1u << k) > b - a) --k;
        cover.push_back(dyadic_interval(top - k, a >> k, path_len));
        a += 1u << k;
    }
    return cover;
}

Distance DetourIndex::lookup(std::uint32_t level, std::int64_t round,
                             VertexId v) const {
    if (level >= level_count)
        throw std::out_of_range("DetourIndex::lookup: level out of range");
    const auto& log = entries[level][v];
    if (round < 0) return Distance::unreachable();
    // Last entry with entry.round <= round.
    auto it = std::upper_bound(log.begin(), log.end(), round,
                               [](std::int64_t r, const RoundEntry& e) {
                                   return r < static_cast<std::int64_t>(e.round);
                               });
    if (it == log.begin()) return Distance::unreachable();
    return Distance::finite(std::prev(it)->length);
}

std::size_t DetourIndex::total_entries() const {
    std::size_t total = 0;
    for (const auto& level : entries)
        for (const auto& log : level) total += log.size();
    return total;
}

DetourIndex build_detour_index(const Digraph& g, const SpTree& t,
                               const CentroidSplit& split, double round_eps,
                               std::uint64_t round_eps_fixed) {
    const std::size_t n = g.order();
    const std::uint32_t p = static_cast<std::uint32_t>(split.root_path.size());
    if (p == 0) throw std::invalid_argument("build_detour_index: empty root path");
    const std::uint32_t top = ceil_log2(p);

    DetourIndex idx;
    idx.path_len = p;
    idx.padded_len = 1u << top;
    idx.level_count = top + 1;
    idx.round_eps = round_eps;
    idx.round_eps_fixed = round_eps_fixed;
    idx.entries.assign(idx.level_count, {});

    const std::vector<std::uint32_t>& pos = split.path_pos;

    std::vector<Distance> d(n);
    std::vector<VertexId> branch(n);
    std::vector<std::uint64_t> heap_stamp(n, 0), settled_stamp(n, 0);
    std::uint64_t token = 0;

    using HeapItem = std::pair<std::uint64_t, VertexId>;
    std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> heap;

    for (std::uint32_t level = 0; level < idx.level_count; ++level) {
        auto& lists = idx.entries[level];
        lists.assign(n, {});
        std::fill(d.begin(), d.end(), Distance::unreachable());
        std::fill(branch.begin(), branch.end(), kNoVertex);
        const std::uint32_t block = idx.padded_len >> level;

        for (std::uint32_t j = 0; j < (1u << level); ++j) {
            const std::uint32_t lo = j * block;
            if (lo >= p) break;  // clipped-away rounds
            const std::uint32_t hi = std::min(lo + block, p) - 1;
            ++token;
            assert(heap.empty());

            // Seed the round's interval with tree distances; the seed itself
            // is its own branch vertex.
            for (std::uint32_t q = lo; q <= hi; ++q) {
                VertexId u = split.root_path[q];
                d[u] = t.dist[u];
                branch[u] = u;
                heap_stamp[u] = token;
                heap.push({d[u].raw(), u});
                lists[u].push_back({j, d[u].value(), u});
            }

            while (!heap.empty()) {
                auto [du, u] = heap.top();
                heap.pop();
                if (settled_stamp[u] == token || du != d[u].raw()) continue;
                settled_stamp[u] = token;
                if (pos[u] != kNoPos && pos[u] > hi) continue;  // target only
                for (const Edge& e : g.out(u)) {
                    const VertexId v = e.to;
                    if (pos[v] != kNoPos) {
                        if (pos[v] <= hi) continue;  // sealed positions
                        if (pos[u] != kNoPos && pos[v] == pos[u] + 1)
                            continue;  // root-path edge
                    }
                    const Distance cand = d[u] + e.w;
                    const bool in_heap =
                        heap_stamp[v] == token && settled_stamp[v] != token;
                    if (in_heap) {
                        if (cand < d[v]) {
                            d[v] = cand;
                            branch[v] = branch[u];
                            heap.push({cand.raw(), v});
                            assert(!lists[v].empty() && lists[v].back().round == j);
                            lists[v].back() = {j, cand.value(), branch[u]};
                        }
                    } else if (improves_enough(cand, d[v], round_eps_fixed)) {
                        d[v] = cand;
                        branch[v] = branch[u];
                        heap_stamp[v] = token;
                        heap.push({cand.raw(), v});
                        lists[v].push_back({j, cand.value(), branch[u]});
                    }
                }
            }
        }
    }
    return idx;
}

}  // namespace vsdo
