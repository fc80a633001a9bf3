#pragma once

#include <string_view>
#include <vector>

#include "vsdo/digraph.hpp"
#include "vsdo/progressive.hpp"
#include "vsdo/sp_tree.hpp"
#include "vsdo/types.hpp"

namespace vsdo {

// Backend for the per-fault source->centroid replacement distances.
//   exact: one Dijkstra on g - fault per root-path fault (ratio 1).
//   fast:  near-linear drop-in behind the same (1+eps) contract, computed
//          from the detour index (detour side + rejoin sweep).
enum class SzProvider { exact, fast };

SzProvider parse_sz_provider(std::string_view name);  // throws on unknown name
const char* to_string(SzProvider p);

// Approximate shortest detour length from the source to `target` when
// `fault` (a root-path vertex other than the source) fails: the minimum over
// all levels of the value recorded strictly before the fault's round.
// Guarantees exact <= result <= (1+eps)*exact; Unreachable iff no detour
// avoiding the fault exists.
Distance detour_query(const DetourIndex& idx, const CentroidSplit& split,
                      VertexId fault, VertexId target);

// Position-based core of detour_query; no validation, no source shortcut.
Distance detour_query_at(const DetourIndex& idx, std::uint32_t fault_pos,
                         VertexId target);

// d-hat table: entry at path position f approximates the source->centroid
// distance when root-path vertex f fails. Entry 0 (the source) is unused.
// The fast provider requires the detour index built for the same split.
std::vector<Distance> build_centroid_replacement_table(
    const Digraph& g, const SpTree& t, const CentroidSplit& split,
    SzProvider provider, const DetourIndex* detours = nullptr);

// Combined trunk-fault query for targets below the centroid:
// min(detour side, d-hat(fault) + tree distance from the centroid to target).
Distance trunk_fault_query(const DetourIndex& idx, const CentroidSplit& split,
                           const SpTree& t, const std::vector<Distance>& replacement,
                           VertexId fault, VertexId target);

}  // namespace vsdo
