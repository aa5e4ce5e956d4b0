#pragma once

#include "hamlab/structures.hpp"

namespace hamlab {

// Certified witness checks. A malformed witness yields false, never an exception.

// w is a loose Hamilton cycle of H: at least 3 edges of H, consecutive edges
// meet in exactly one vertex, non-consecutive edges are disjoint, and the
// edges cover all n vertices.
bool verify_loose_hc(const Hypergraph& h, const LooseCycle& w);

// w is a directed loose Hamilton cycle of D: each arc's last vertex is the next
// arc's first, every other vertex occurrence is distinct, and all n vertices are covered.
bool verify_dir_loose_hc(const DirHypergraph& d, const DirLooseCycle& w);

// w is a Hamilton cycle of G (directed for digraphs) whose n edges carry the
// listed colors, all pairwise distinct.
bool verify_rainbow_hc(const ColoredGraph& g, const RainbowCycle& w);
bool verify_rainbow_hc(const ColoredDigraph& g, const RainbowCycle& w);

}  // namespace hamlab
