#pragma once

#include <cstdint>
#include <optional>

#include "hamlab/oracles.hpp"
#include "hamlab/seed.hpp"
#include "hamlab/structures.hpp"

namespace hamlab {

// A sample of the interpolating structure Gamma_i over the lexicographic slot
// order e_0, ..., e_{N-1}, N = C(n, k). Slots with index < i are split: each of
// their k! orientations is an independent arc. Slots with index >= i are
// unsplit: all orientations are present together or not at all.
struct ChainPoint {
    int n;
    int k;
    double p;
    std::uint64_t i;
    DirHypergraph structure;
};

// Colored analogue on pairs (k = 2). Unsplit pairs carry both arcs or neither,
// sharing one uniform color; split arcs are present and colored independently.
struct ColoredChainPoint {
    int n;
    int c;
    double p;
    std::uint64_t i;
    ColoredDigraph structure;
};

ChainPoint chain_sample(int n, int k, double p, std::uint64_t i, const Seed& seed);
ColoredChainPoint chain_sample_colored(int n, double p, int c, std::uint64_t i, const Seed& seed);

enum class ChainEvent {
    LooseHC,     // underlying hypergraph (orientations forgotten) has a loose Hamilton cycle
    DirLooseHC,  // a directed loose Hamilton cycle
    DirHC,       // directed Hamilton cycle; k must be 2
};

bool chain_event_holds(const DirHypergraph& structure, ChainEvent event, const OracleLimits& limits = {});

// Exact Pr[event] under Gamma_i, summing over every outcome of the independent
// binary slot variables. Variables are deterministic when p is 0 or 1.
// Throws CapacityError when more than maxFreeVariables are random.
double exact_event_probability(int n, int k, double p, std::uint64_t i, ChainEvent event,
                               int maxFreeVariables = 24);

// The three exposures of the Gamma_{i-1} -> Gamma_i step, conditioned on every
// arc outside slot e_{i-1}:
//   WithoutSlot: a directed loose Hamilton cycle exists without any ordering of the slot
//   NeverEvenWithAll: none exists even with all orderings of the slot added
//   NeedsSlot: one exists only with at least one ordering of the slot
enum class StepCase { WithoutSlot, NeverEvenWithAll, NeedsSlot };

struct StepAnalysis {
    StepCase stepCase;
    // Indicators of the three cases as computed independently; exactly one
    // holds whenever the event is monotone.
    bool withoutSlot;
    bool neverEvenWithAll;
    bool needsSlot;
    // Conditional probability of the event under Gamma_{i-1} (slot all-or-none)
    // and under Gamma_i (orientations independent), both exact.
    double probBefore;
    double probAfter;
    // In the NeedsSlot case, an orientation whose arc alone completes a cycle.
    std::optional<std::uint32_t> sufficientOrientation;

    bool exclusive_and_exhaustive() const {
        return static_cast<int>(withoutSlot) + static_cast<int>(neverEvenWithAll) + static_cast<int>(needsSlot) == 1;
    }
};

// `rest` must not contain any arc over `slot`.
StepAnalysis analyze_step(const DirHypergraph& rest, const Tuple& slot, double p);

// Samples Gamma_i (1 <= i <= N) and analyzes the step that split slot e_{i-1}.
StepAnalysis analyze_chain_step(int n, int k, double p, std::uint64_t i, const Seed& seed);

}  // namespace hamlab
