#pragma once

#include "hamlab/seed.hpp"
#include "hamlab/structures.hpp"

namespace hamlab {

// H^(k)_{n,p}: every k-subset of [n] is an edge independently with probability p.
// The decision for slot j uses lane 0 of counter j.
Hypergraph gen_hyper(int n, int k, double p, const Seed& seed);

// D^(k)_{n,p}: every ordered k-tuple of distinct vertices is an arc independently
// with probability p. Orientation r of slot j uses lane 1 + r of counter j.
DirHypergraph gen_dir_hyper(int n, int k, double p, const Seed& seed);

// G^c_{n,p}: G_{n,p} with an independent uniform color in [0, c) per edge.
ColoredGraph gen_colored_graph(int n, double p, int c, const Seed& seed);

// D^c_{n,p}: D_{n,p} with an independent uniform color per arc; both
// orientations of a pair are separate elements.
ColoredDigraph gen_colored_digraph(int n, double p, int c, const Seed& seed);

void check_probability(double p);
void check_uniformity(int n, int k);
void check_colors(int c);

}  // namespace hamlab
