#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hamlab/oracles.hpp"
#include "hamlab/seed.hpp"
#include "hamlab/structures.hpp"

namespace hamlab {

// Multi-round exposure parameters. The target H^(k)_{n,p} is the union of one
// undirected round at p/2 and f directed rounds at q, so
//   (1 - p/2) (1 - q)^(k! f) = 1 - p,
// and each directed round, orientations forgotten, is H^(k)_{n,s} with
//   (1 - q)^(k!) = 1 - s.
struct ExposureParams {
    double p;
    int k;
    int f;
    double q;
    double s;

    double union_residual() const;  // |(1 - p/2)(1 - q)^(k! f) - (1 - p)|
    double round_residual() const;  // |(1 - q)^(k!) - (1 - s)|
};

// q solving (1 - p/2)(1 - q)^exponent = 1 - p, in closed form:
//   q = 1 - ((1 - p) / (1 - p/2))^(1/exponent).
// Throws ParameterError unless 0 < p < 1 and exponent >= 1.
double solve_round_probability(double p, std::uint64_t exponent);

// solve_round_probability with exponent k! f, plus the matching s.
ExposureParams solve_q(double p, int f, int k);

struct Exposure {
    Hypergraph base;                   // H_0 ~ H^(k)_{n,p/2}
    std::vector<DirHypergraph> rounds;  // H_1..H_f ~ D^(k)_{n,q}
    Hypergraph unionGraph;             // base plus every round with orientations forgotten
};

// Round r (1-based) draws from seed.derive("round").derive(r); the base round
// from seed.derive("base"). With q = 0 the union equals the base round.
Exposure compose_exposure(int n, int k, const ExposureParams& xp, const Seed& seed);

// Replaces the ordered edge estar = (x_1, ..., x_k) by a single vertex. The
// remaining vertices keep their relative order and are renumbered from 0; the
// star vertex is the last index, n - k.
class LooseContraction {
public:
    LooseContraction(int n, Tuple estar);

    int n() const { return n_; }
    int k() const { return static_cast<int>(estar_.size()); }
    int contracted_n() const { return n_ - k() + 1; }
    const Tuple& estar() const { return estar_; }
    VertexId star() const { return static_cast<VertexId>(contracted_n() - 1); }

    VertexId to_contracted(VertexId original) const;
    VertexId to_original(VertexId contracted) const;

    // The renamed arc if it survives the filter, nullopt if it is dropped. An arc
    // survives when it avoids estar, or meets it only in x_1 at a position other
    // than the first, or meets it only in x_k at the first position.
    std::optional<Tuple> image(const Tuple& arc) const;
    // The unique original arc mapping onto a contracted arc: the star becomes
    // x_k in first position and x_1 anywhere else.
    Tuple preimage(const Tuple& contractedArc) const;

private:
    int n_;
    Tuple estar_;
    std::vector<std::int32_t> forward_;  // -1 for vertices of estar
    std::vector<VertexId> backward_;
};

DirHypergraph contract_loose(const DirHypergraph& round, const LooseContraction& ctr);

// Expands a directed loose Hamilton cycle of the contracted structure, in
// which the star vertex is a link, into a loose Hamilton cycle on [n] that
// uses estar as one of its edges. Throws PreconditionError if the star is not
// a link or the witness is structurally malformed.
LooseCycle lift_loose(const DirLooseCycle& w, const LooseContraction& ctr);

// Replaces the edge {x, y} of color c1 by one vertex (index n - 2); colors other
// than c1 are renumbered onto [0, n - 1).
class ColoredContraction {
public:
    ColoredContraction(int n, VertexId x, VertexId y, Color c1, double q);

    int n() const { return n_; }
    int contracted_n() const { return n_ - 1; }
    VertexId x() const { return x_; }
    VertexId y() const { return y_; }
    Color c1() const { return c1_; }
    VertexId star() const { return static_cast<VertexId>(n_ - 2); }
    // Presence probability of a contracted arc: (1 - 1/n) q.
    double s_prime() const { return sPrime_; }

    VertexId to_contracted(VertexId original) const;
    VertexId to_original(VertexId contracted) const;
    Color to_contracted_color(Color c) const;
    Color to_original_color(Color c) const;

    // Arc u -> v survives when its color is not c1 and it avoids {x, y}, or
    // enters x (x becomes the star), or leaves y (y becomes the star).
    std::optional<ColoredEdge> image(const ColoredEdge& arc) const;

private:
    int n_;
    VertexId x_;
    VertexId y_;
    Color c1_;
    double sPrime_;
};

ColoredDigraph contract_colored(const ColoredDigraph& g2, const ColoredContraction& ctr);

// The arc into the star regains head x, the arc out of it regains tail y, and
// the closing arc x -> y carries c1. Throws PreconditionError on a witness
// that is not a vertex permutation with distinct in-range colors.
RainbowCycle lift_colored(const RainbowCycle& w, const ColoredContraction& ctr);

struct PipelineOptions {
    // When false, every round is searched so per-round outcomes can be studied;
    // the returned witness still comes from the first successful round.
    bool stopAtFirstSuccess = true;
    OracleLimits limits{};
};

struct LoosePipelineResult {
    bool found = false;
    std::optional<int> round;  // 1-based index of the first successful round
    std::optional<LooseCycle> witness;
    std::optional<DirLooseCycle> contractedWitness;
    ExposureParams params;
    Exposure exposure;
    std::optional<LooseContraction> contraction;
    std::vector<bool> roundOutcomes;  // one entry per searched round
};

// Samples the exposure, contracts the lexicographically first base edge (in
// sorted order) and searches each contracted round for a directed loose
// Hamilton cycle through the star as a link; the first success is lifted.
// Throws ParameterError when (k-1) does not divide n or f < 1.
LoosePipelineResult pipeline_loose(int n, int k, double p, int f, const Seed& seed,
                                   const PipelineOptions& options = {});

struct RainbowExposure {
    ColoredGraph first;    // G_1 ~ G^n_{n,p/2}
    ColoredDigraph second;  // G_2 ~ D^n_{n,q}

    // Directed union used to certify lifted cycles: every arc of the second
    // round, the contracted edge as x -> y with color c1, and each remaining
    // first-round edge in both directions where the second round has no arc.
    ColoredDigraph combined(const std::optional<ColoredContraction>& ctr) const;
};

struct RainbowPipelineResult {
    bool found = false;
    std::optional<RainbowCycle> witness;
    std::optional<RainbowCycle> contractedWitness;
    double p = 0.0;
    double q = 0.0;
    double s = 0.0;  // (1 - q)^2 = 1 - s
    RainbowExposure exposure;
    std::optional<ColoredContraction> contraction;
};

// Odd n only; throws ParameterError for even n (see direct_rainbow).
RainbowPipelineResult pipeline_rainbow(int n, double p, const Seed& seed, const OracleLimits& limits = {});

struct DirectRainbowResult {
    bool found = false;
    std::optional<RainbowCycle> witness;
    ColoredGraph graph;
};

// Even-n path: a fresh G^n_{n,p} searched directly.
DirectRainbowResult direct_rainbow(int n, double p, const Seed& seed, const OracleLimits& limits = {});

}  // namespace hamlab
