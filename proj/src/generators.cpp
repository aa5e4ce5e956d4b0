#include "hamlab/generators.hpp"

#include <cmath>
#include <string>

#include "hamlab/combinatorics.hpp"
#include "hamlab/errors.hpp"

namespace hamlab {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("probability must lie in [0, 1], got " + std::to_string(p));
}

void check_uniformity(int n, int k) {
    if (k < 2 || k > n)
        throw ParameterError("need 2 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    if (k > 10) throw ParameterError("uniformity above 10 is not supported");
}

void check_colors(int c) {
    if (c < 1) throw ParameterError("color count must be at least 1");
}

Hypergraph gen_hyper(int n, int k, double p, const Seed& seed) {
    check_uniformity(n, k);
    check_probability(p);
    std::vector<Tuple> edges;
    for_each_slot(n, k, [&](std::uint64_t j, const Tuple& slot) {
        if (seed.bernoulli(j, lanes::kJoint, p)) edges.push_back(slot);
    });
    return Hypergraph(n, k, std::move(edges));
}

DirHypergraph gen_dir_hyper(int n, int k, double p, const Seed& seed) {
    check_uniformity(n, k);
    check_probability(p);
    std::vector<Tuple> arcs;
    for_each_slot(n, k, [&](std::uint64_t j, const Tuple& slot) {
        for_each_orientation(slot, [&](std::uint32_t r, const Tuple& arc) {
            if (seed.bernoulli(j, lanes::orientation(r), p)) arcs.push_back(arc);
        });
    });
    return DirHypergraph(n, k, std::move(arcs));
}

ColoredGraph gen_colored_graph(int n, double p, int c, const Seed& seed) {
    check_probability(p);
    check_colors(c);
    std::vector<ColoredEdge> edges;
    if (n >= 2) {
        for_each_slot(n, 2, [&](std::uint64_t j, const Tuple& slot) {
            if (!seed.bernoulli(j, lanes::kJoint, p)) return;
            const auto color = static_cast<Color>(seed.below(j, lanes::joint_color(), static_cast<std::uint64_t>(c)));
            edges.push_back({slot[0], slot[1], color});
        });
    }
    return ColoredGraph(n, c, std::move(edges));
}

ColoredDigraph gen_colored_digraph(int n, double p, int c, const Seed& seed) {
    check_probability(p);
    check_colors(c);
    std::vector<ColoredEdge> arcs;
    if (n >= 2) {
        for_each_slot(n, 2, [&](std::uint64_t j, const Tuple& slot) {
            for (std::uint32_t r = 0; r < 2; ++r) {
                if (!seed.bernoulli(j, lanes::orientation(r), p)) continue;
                const auto color =
                    static_cast<Color>(seed.below(j, lanes::orientation_color(r), static_cast<std::uint64_t>(c)));
                // r = 0 is the lexicographically first ordering (u < v).
                if (r == 0)
                    arcs.push_back({slot[0], slot[1], color});
                else
                    arcs.push_back({slot[1], slot[0], color});
            }
        });
    }
    return ColoredDigraph(n, c, std::move(arcs));
}

}  // namespace hamlab
