#include "hamlab/coupling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "hamlab/combinatorics.hpp"
#include "hamlab/errors.hpp"
#include "hamlab/generators.hpp"

namespace hamlab {

namespace {

void check_index(std::uint64_t i, std::uint64_t slots) {
    if (i > slots)
        throw ParameterError("chain index " + std::to_string(i) + " outside [0, " + std::to_string(slots) + "]");
}

}  // namespace

ChainPoint chain_sample(int n, int k, double p, std::uint64_t i, const Seed& seed) {
    check_uniformity(n, k);
    check_probability(p);
    check_index(i, binomial(n, k));
    std::vector<Tuple> arcs;
    for_each_slot(n, k, [&](std::uint64_t j, const Tuple& slot) {
        const bool split = j < i;
        const bool together = !split && seed.bernoulli(j, lanes::kJoint, p);
        for_each_orientation(slot, [&](std::uint32_t r, const Tuple& arc) {
            if (split ? seed.bernoulli(j, lanes::orientation(r), p) : together) arcs.push_back(arc);
        });
    });
    return ChainPoint{n, k, p, i, DirHypergraph(n, k, std::move(arcs))};
}

ColoredChainPoint chain_sample_colored(int n, double p, int c, std::uint64_t i, const Seed& seed) {
    if (n < 2) throw ParameterError("colored chain needs n >= 2");
    check_probability(p);
    check_colors(c);
    check_index(i, binomial(n, 2));
    const auto palette = static_cast<std::uint64_t>(c);
    std::vector<ColoredEdge> arcs;
    for_each_slot(n, 2, [&](std::uint64_t j, const Tuple& slot) {
        if (j < i) {
            for (std::uint32_t r = 0; r < 2; ++r) {
                if (!seed.bernoulli(j, lanes::orientation(r), p)) continue;
                const auto color = static_cast<Color>(seed.below(j, lanes::orientation_color(r), palette));
                arcs.push_back(r == 0 ? ColoredEdge{slot[0], slot[1], color} : ColoredEdge{slot[1], slot[0], color});
            }
        } else if (seed.bernoulli(j, lanes::kJoint, p)) {
            const auto color = static_cast<Color>(seed.below(j, lanes::joint_color(), palette));
            arcs.push_back({slot[0], slot[1], color});
            arcs.push_back({slot[1], slot[0], color});
        }
    });
    return ColoredChainPoint{n, c, p, i, ColoredDigraph(n, c, std::move(arcs))};
}

bool chain_event_holds(const DirHypergraph& structure, ChainEvent event, const OracleLimits& limits) {
    switch (event) {
        case ChainEvent::LooseHC:
            return find_loose_hc(structure.underlying(), limits).has_value();
        case ChainEvent::DirHC:
            if (structure.k() != 2) throw ParameterError("the directed Hamilton cycle event needs k = 2");
            [[fallthrough]];
        case ChainEvent::DirLooseHC:
            return find_dir_loose_hc(structure, std::nullopt, limits).has_value();
    }
    return false;
}

double exact_event_probability(int n, int k, double p, std::uint64_t i, ChainEvent event, int maxFreeVariables) {
    check_uniformity(n, k);
    check_probability(p);
    check_index(i, binomial(n, k));
    if (event == ChainEvent::DirHC && k != 2) throw ParameterError("the directed Hamilton cycle event needs k = 2");

    // One binary variable per unsplit slot, one per orientation of a split slot.
    std::vector<std::vector<Tuple>> variables;
    for_each_slot(n, k, [&](std::uint64_t j, const Tuple& slot) {
        if (j < i) {
            for_each_orientation(slot, [&](std::uint32_t, const Tuple& arc) { variables.push_back({arc}); });
        } else {
            std::vector<Tuple> all;
            for_each_orientation(slot, [&](std::uint32_t, const Tuple& arc) { all.push_back(arc); });
            variables.push_back(std::move(all));
        }
    });

    if (p == 0.0 || p == 1.0) {
        std::vector<Tuple> arcs;
        if (p == 1.0)
            for (const auto& v : variables) arcs.insert(arcs.end(), v.begin(), v.end());
        return chain_event_holds(DirHypergraph(n, k, std::move(arcs)), event) ? 1.0 : 0.0;
    }

    const auto free = static_cast<int>(variables.size());
    if (free > maxFreeVariables)
        throw CapacityError("exact enumeration over " + std::to_string(free) + " random slot variables exceeds " +
                            std::to_string(maxFreeVariables));

    const double logP = std::log(p);
    const double logQ = std::log1p(-p);
    double total = 0.0;
    const std::uint64_t outcomes = std::uint64_t{1} << free;
    std::vector<Tuple> arcs;
    for (std::uint64_t outcome = 0; outcome < outcomes; ++outcome) {
        arcs.clear();
        for (int v = 0; v < free; ++v)
            if ((outcome >> v) & 1) arcs.insert(arcs.end(), variables[static_cast<std::size_t>(v)].begin(),
                                                variables[static_cast<std::size_t>(v)].end());
        if (!chain_event_holds(DirHypergraph(n, k, arcs), event)) continue;
        const int ones = std::popcount(outcome);
        total += std::exp(ones * logP + (free - ones) * logQ);
    }
    return total;
}

StepAnalysis analyze_step(const DirHypergraph& rest, const Tuple& slot, double p) {
    check_probability(p);
    std::vector<Tuple> orientations;
    for_each_orientation(sorted_copy(slot), [&](std::uint32_t, const Tuple& arc) { orientations.push_back(arc); });
    for (const auto& arc : orientations)
        if (rest.contains(arc)) throw PreconditionError("the conditioning structure already contains the slot");

    auto holds_with = [&](std::uint64_t subset) {
        std::vector<Tuple> arcs = rest.arcs();
        for (std::size_t r = 0; r < orientations.size(); ++r)
            if ((subset >> r) & 1) arcs.push_back(orientations[r]);
        return find_dir_loose_hc(DirHypergraph(rest.n(), rest.k(), std::move(arcs))).has_value();
    };

    const std::size_t count = orientations.size();
    const std::uint64_t all = (std::uint64_t{1} << count) - 1;
    const bool without = holds_with(0);
    const bool withAll = holds_with(all);

    StepAnalysis out{};
    out.withoutSlot = without;
    out.neverEvenWithAll = !withAll;
    out.needsSlot = !without && withAll;
    out.stepCase = without ? StepCase::WithoutSlot : (withAll ? StepCase::NeedsSlot : StepCase::NeverEvenWithAll);

    // Gamma_{i-1}: the slot contributes nothing (prob 1 - p) or everything (prob p).
    out.probBefore = (without ? 1.0 - p : 0.0) + (withAll ? p : 0.0);

    double after = 0.0;
    for (std::uint64_t subset = 0; subset <= all; ++subset) {
        const int ones = std::popcount(subset);
        const double weight = std::pow(p, ones) * std::pow(1.0 - p, static_cast<int>(count) - ones);
        if (weight == 0.0) continue;
        if (subset == 0 ? without : (subset == all ? withAll : holds_with(subset))) after += weight;
    }
    out.probAfter = after;

    if (out.needsSlot) {
        for (std::size_t r = 0; r < count; ++r)
            if (holds_with(std::uint64_t{1} << r)) {
                out.sufficientOrientation = static_cast<std::uint32_t>(r);
                break;
            }
    }
    return out;
}

StepAnalysis analyze_chain_step(int n, int k, double p, std::uint64_t i, const Seed& seed) {
    const std::uint64_t slots = binomial(n, k);
    if (i < 1 || i > slots) throw ParameterError("step index must lie in [1, N]");
    const ChainPoint point = chain_sample(n, k, p, i, seed);
    Tuple slot;
    for_each_slot(n, k, [&](std::uint64_t j, const Tuple& s) {
        if (j == i - 1) slot = s;
    });
    std::vector<Tuple> rest;
    for (const auto& arc : point.structure.arcs())
        if (sorted_copy(arc) != slot) rest.push_back(arc);
    return analyze_step(DirHypergraph(n, k, std::move(rest)), slot, p);
}

}  // namespace hamlab
