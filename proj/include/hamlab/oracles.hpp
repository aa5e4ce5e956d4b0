#pragma once

#include <cstdint>
#include <optional>

#include "hamlab/structures.hpp"

namespace hamlab {

// Size guards for the exact procedures. Exceeding one raises CapacityError.
struct OracleLimits {
    int maxLooseN = 24;    // find_loose_hc / find_dir_loose_hc
    int maxRainbowN = 14;  // find_rainbow_hc / find_rainbow_dir_hc
    int maxCountN = 12;    // count_loose_hc
};

// Complete search for a loose Hamilton cycle. Returns nullopt without
// searching when (k-1) does not divide n or the cycle would have fewer than 3 edges.
std::optional<LooseCycle> find_loose_hc(const Hypergraph& h, const OracleLimits& limits = {});

// Complete search for a directed loose Hamilton cycle. With requiredLink set,
// the witness has that vertex as the last vertex of one arc and the first of the next.
std::optional<DirLooseCycle> find_dir_loose_hc(const DirHypergraph& d,
                                               std::optional<VertexId> requiredLink = std::nullopt,
                                               const OracleLimits& limits = {});

// Complete search for a Hamilton cycle with pairwise-distinct colors.
std::optional<RainbowCycle> find_rainbow_hc(const ColoredGraph& g, const OracleLimits& limits = {});
std::optional<RainbowCycle> find_rainbow_dir_hc(const ColoredDigraph& g, const OracleLimits& limits = {});

// Number of distinct loose Hamilton cycles, counting distinct edge sets.
std::uint64_t count_loose_hc(const Hypergraph& h, const OracleLimits& limits = {});

}  // namespace hamlab
