#include "hamlab/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "hamlab/combinatorics.hpp"
#include "hamlab/errors.hpp"
#include "hamlab/generators.hpp"

namespace hamlab {

double ExposureParams::union_residual() const {
    const double exponent = static_cast<double>(factorial(k)) * f;
    return std::abs((1.0 - p / 2.0) * std::pow(1.0 - q, exponent) - (1.0 - p));
}

double ExposureParams::round_residual() const {
    return std::abs(std::pow(1.0 - q, static_cast<double>(factorial(k))) - (1.0 - s));
}

double solve_round_probability(double p, std::uint64_t exponent) {
    if (!(p > 0.0 && p < 1.0)) throw ParameterError("exposure needs 0 < p < 1, got " + std::to_string(p));
    if (exponent < 1) throw ParameterError("exposure exponent must be at least 1");
    // log-space keeps q accurate when p is tiny
    const double logRatio = std::log1p(-p) - std::log1p(-p / 2.0);
    return -std::expm1(logRatio / static_cast<double>(exponent));
}

ExposureParams solve_q(double p, int f, int k) {
    if (f < 1) throw ParameterError("round count f must be at least 1");
    if (k < 2 || k > 10) throw ParameterError("uniformity must lie in [2, 10]");
    const std::uint64_t kf = factorial(k);
    const double q = solve_round_probability(p, kf * static_cast<std::uint64_t>(f));
    const double s = -std::expm1(static_cast<double>(kf) * std::log1p(-q));
    return ExposureParams{p, k, f, q, s};
}

Exposure compose_exposure(int n, int k, const ExposureParams& xp, const Seed& seed) {
    check_probability(xp.p);
    check_probability(xp.q);
    if (xp.k != k) throw ParameterError("exposure parameters were solved for a different k");
    if (xp.f < 0) throw ParameterError("round count must be non-negative");
    Hypergraph base = gen_hyper(n, k, xp.p / 2.0, seed.derive("base"));
    std::vector<DirHypergraph> rounds;
    rounds.reserve(static_cast<std::size_t>(xp.f));
    const Seed roundSeeds = seed.derive("round");
    for (int r = 1; r <= xp.f; ++r)
        rounds.push_back(gen_dir_hyper(n, k, xp.q, roundSeeds.derive(static_cast<std::uint64_t>(r))));

    std::vector<Tuple> edges = base.edges();
    for (const auto& round : rounds)
        for (const auto& arc : round.arcs()) edges.push_back(sorted_copy(arc));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Hypergraph unionGraph(n, k, std::move(edges));
    return Exposure{std::move(base), std::move(rounds), std::move(unionGraph)};
}

LooseContraction::LooseContraction(int n, Tuple estar)
    : n_(n), estar_(std::move(estar)), forward_(static_cast<std::size_t>(std::max(n, 0)), 0) {
    const int k = static_cast<int>(estar_.size());
    if (k < 2 || k > n) throw ParameterError("contracted edge must have 2 <= k <= n vertices");
    for (std::size_t i = 0; i < estar_.size(); ++i) {
        if (estar_[i] >= static_cast<VertexId>(n)) throw ParameterError("contracted edge vertex out of range");
        for (std::size_t j = 0; j < i; ++j)
            if (estar_[i] == estar_[j]) throw ParameterError("contracted edge repeats a vertex");
        forward_[estar_[i]] = -1;
    }
    for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
        if (forward_[v] < 0) continue;
        forward_[v] = static_cast<std::int32_t>(backward_.size());
        backward_.push_back(v);
    }
}

VertexId LooseContraction::to_contracted(VertexId original) const {
    if (original >= static_cast<VertexId>(n_) || forward_[original] < 0)
        throw ParameterError("vertex " + std::to_string(original) + " has no image outside the contracted edge");
    return static_cast<VertexId>(forward_[original]);
}

VertexId LooseContraction::to_original(VertexId contracted) const {
    if (contracted >= backward_.size()) throw ParameterError("the star vertex has no single original vertex");
    return backward_[contracted];
}

std::optional<Tuple> LooseContraction::image(const Tuple& arc) const {
    if (static_cast<int>(arc.size()) != k()) throw ParameterError("arc size does not match the contracted edge");
    const VertexId first = estar_.front();
    const VertexId last = estar_.back();
    std::size_t hits = 0;
    std::size_t position = 0;
    VertexId hit = 0;
    for (std::size_t t = 0; t < arc.size(); ++t) {
        if (forward_[arc[t]] < 0) {
            ++hits;
            position = t;
            hit = arc[t];
        }
    }
    if (hits > 1) return std::nullopt;
    if (hits == 1) {
        const bool keepFirst = hit == first && position != 0;
        const bool keepLast = hit == last && position == 0;
        if (!keepFirst && !keepLast) return std::nullopt;
    }
    Tuple out;
    out.reserve(arc.size());
    for (VertexId v : arc) out.push_back(forward_[v] < 0 ? star() : static_cast<VertexId>(forward_[v]));
    return out;
}

Tuple LooseContraction::preimage(const Tuple& contractedArc) const {
    Tuple out;
    out.reserve(contractedArc.size());
    for (std::size_t t = 0; t < contractedArc.size(); ++t) {
        const VertexId v = contractedArc[t];
        if (v == star())
            out.push_back(t == 0 ? estar_.back() : estar_.front());
        else
            out.push_back(to_original(v));
    }
    return out;
}

DirHypergraph contract_loose(const DirHypergraph& round, const LooseContraction& ctr) {
    if (round.k() != ctr.k()) throw ParameterError("round uniformity does not match the contracted edge");
    if (round.n() != ctr.n()) throw ParameterError("round vertex count does not match the contraction");
    std::vector<Tuple> arcs;
    for (const auto& arc : round.arcs())
        if (auto img = ctr.image(arc)) arcs.push_back(std::move(*img));
    return DirHypergraph(ctr.contracted_n(), ctr.k(), std::move(arcs));
}

LooseCycle lift_loose(const DirLooseCycle& w, const LooseContraction& ctr) {
    const auto m = w.arcSeq.size();
    const auto nStar = static_cast<std::size_t>(ctr.contracted_n());
    const VertexId star = ctr.star();
    if (m < 3) throw PreconditionError("witness has fewer than 3 arcs");
    std::vector<char> seen(nStar, 0);
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < m; ++j) {
        const Tuple& arc = w.arcSeq[j];
        if (static_cast<int>(arc.size()) != ctr.k()) throw PreconditionError("witness arc has the wrong size");
        if (arc.back() != w.arcSeq[(j + 1) % m].front()) throw PreconditionError("witness arcs do not chain");
        for (std::size_t t = 0; t + 1 < arc.size(); ++t) {
            if (arc[t] >= nStar || seen[arc[t]]) throw PreconditionError("witness repeats or leaves the vertex set");
            seen[arc[t]] = 1;
        }
        if (arc.back() == star) entering = j;
    }
    if (static_cast<std::size_t>(std::count(seen.begin(), seen.end(), 1)) != nStar)
        throw PreconditionError("witness does not cover the contracted vertex set");
    if (!entering) throw PreconditionError("the star vertex is not a link of the witness");

    LooseCycle out;
    out.edgeSeq.reserve(m + 1);
    for (std::size_t step = 1; step <= m; ++step)
        out.edgeSeq.push_back(sorted_copy(ctr.preimage(w.arcSeq[(*entering + step) % m])));
    out.edgeSeq.push_back(sorted_copy(ctr.estar()));
    return out;
}

ColoredContraction::ColoredContraction(int n, VertexId x, VertexId y, Color c1, double q)
    : n_(n), x_(x), y_(y), c1_(c1), sPrime_((1.0 - 1.0 / n) * q) {
    if (n < 3) throw ParameterError("colored contraction needs n >= 3");
    if (x >= static_cast<VertexId>(n) || y >= static_cast<VertexId>(n) || x == y)
        throw ParameterError("contracted pair must be two distinct vertices");
    if (c1 >= static_cast<Color>(n)) throw ParameterError("contracted color out of range");
    check_probability(q);
}

VertexId ColoredContraction::to_contracted(VertexId v) const {
    if (v >= static_cast<VertexId>(n_) || v == x_ || v == y_)
        throw ParameterError("vertex has no image outside the contracted pair");
    return v - static_cast<VertexId>(v > x_) - static_cast<VertexId>(v > y_);
}

VertexId ColoredContraction::to_original(VertexId u) const {
    if (u >= star()) throw ParameterError("the star vertex has no single original vertex");
    const VertexId lo = std::min(x_, y_);
    const VertexId hi = std::max(x_, y_);
    VertexId v = u;
    if (v >= lo) ++v;
    if (v >= hi) ++v;
    return v;
}

Color ColoredContraction::to_contracted_color(Color c) const {
    if (c == c1_) throw ParameterError("the contracted color has no image");
    return c > c1_ ? c - 1 : c;
}

Color ColoredContraction::to_original_color(Color c) const { return c >= c1_ ? c + 1 : c; }

std::optional<ColoredEdge> ColoredContraction::image(const ColoredEdge& arc) const {
    if (arc.color == c1_) return std::nullopt;
    const bool uTouches = arc.u == x_ || arc.u == y_;
    const bool vTouches = arc.v == x_ || arc.v == y_;
    const Color color = to_contracted_color(arc.color);
    if (!uTouches && !vTouches) return ColoredEdge{to_contracted(arc.u), to_contracted(arc.v), color};
    // y -> x would become a loop at the star.
    if (uTouches && vTouches) return std::nullopt;
    if (arc.v == x_) return ColoredEdge{to_contracted(arc.u), star(), color};
    if (arc.u == y_) return ColoredEdge{star(), to_contracted(arc.v), color};
    return std::nullopt;
}

ColoredDigraph contract_colored(const ColoredDigraph& g2, const ColoredContraction& ctr) {
    if (g2.n() != ctr.n()) throw ParameterError("digraph vertex count does not match the contraction");
    if (g2.c() != g2.n()) throw ParameterError("colored contraction expects exactly n colors");
    std::vector<ColoredEdge> arcs;
    for (const auto& arc : g2.arcs())
        if (auto img = ctr.image(arc)) arcs.push_back(*img);
    return ColoredDigraph(ctr.contracted_n(), ctr.n() - 1, std::move(arcs));
}

RainbowCycle lift_colored(const RainbowCycle& w, const ColoredContraction& ctr) {
    const auto nStar = static_cast<std::size_t>(ctr.contracted_n());
    if (w.vertexSeq.size() != nStar || w.colorSeq.size() != nStar)
        throw PreconditionError("witness does not span the contracted vertex set");
    std::vector<char> seenVertex(nStar, 0);
    std::vector<char> seenColor(nStar, 0);
    for (std::size_t i = 0; i < nStar; ++i) {
        const VertexId v = w.vertexSeq[i];
        const Color c = w.colorSeq[i];
        if (v >= nStar || seenVertex[v]) throw PreconditionError("witness is not a vertex permutation");
        if (c >= nStar || seenColor[c]) throw PreconditionError("witness reuses a color or leaves the palette");
        seenVertex[v] = 1;
        seenColor[c] = 1;
    }
    const auto at = static_cast<std::size_t>(std::find(w.vertexSeq.begin(), w.vertexSeq.end(), ctr.star()) -
                                             w.vertexSeq.begin());
    RainbowCycle out;
    out.vertexSeq.push_back(ctr.y());
    for (std::size_t step = 1; step < nStar; ++step) out.vertexSeq.push_back(ctr.to_original(w.vertexSeq[(at + step) % nStar]));
    out.vertexSeq.push_back(ctr.x());
    for (std::size_t step = 0; step < nStar; ++step)
        out.colorSeq.push_back(ctr.to_original_color(w.colorSeq[(at + step) % nStar]));
    out.colorSeq.push_back(ctr.c1());
    return out;
}

LoosePipelineResult pipeline_loose(int n, int k, double p, int f, const Seed& seed, const PipelineOptions& options) {
    check_uniformity(n, k);
    check_probability(p);
    if (n % (k - 1) != 0)
        throw ParameterError("loose Hamilton cycles need (k-1) | n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    if (f < 1) throw ParameterError("round count f must be at least 1");

    ExposureParams params{p, k, f, 0.0, 0.0};
    if (p == 1.0) {
        params.q = 1.0;
        params.s = 1.0;
    } else if (p > 0.0) {
        params = solve_q(p, f, k);
    }

    LoosePipelineResult result{false, std::nullopt, std::nullopt, std::nullopt, params,
                               compose_exposure(n, k, params, seed), std::nullopt, {}};
    if (result.exposure.base.empty()) return result;

    result.contraction.emplace(n, result.exposure.base.edges().front());
    const LooseContraction& ctr = *result.contraction;
    for (int r = 1; r <= f; ++r) {
        const DirHypergraph contracted = contract_loose(result.exposure.rounds[static_cast<std::size_t>(r - 1)], ctr);
        auto w = find_dir_loose_hc(contracted, ctr.star(), options.limits);
        result.roundOutcomes.push_back(w.has_value());
        if (w && !result.found) {
            result.found = true;
            result.round = r;
            result.witness = lift_loose(*w, ctr);
            result.contractedWitness = std::move(w);
            if (options.stopAtFirstSuccess) break;
        }
    }
    return result;
}

ColoredDigraph RainbowExposure::combined(const std::optional<ColoredContraction>& ctr) const {
    std::map<std::pair<VertexId, VertexId>, Color> arcs;
    for (const auto& a : second.arcs()) arcs[{a.u, a.v}] = a.color;
    if (ctr) arcs[{ctr->x(), ctr->y()}] = ctr->c1();
    for (const auto& e : first.edges()) {
        arcs.try_emplace({e.u, e.v}, e.color);
        arcs.try_emplace({e.v, e.u}, e.color);
    }
    std::vector<ColoredEdge> out;
    out.reserve(arcs.size());
    for (const auto& [pair, color] : arcs) out.push_back({pair.first, pair.second, color});
    return ColoredDigraph(second.n(), second.c(), std::move(out));
}

RainbowPipelineResult pipeline_rainbow(int n, double p, const Seed& seed, const OracleLimits& limits) {
    if (n < 3 || n % 2 == 0) throw ParameterError("the contraction pipeline needs odd n >= 3; use direct_rainbow for even n");
    check_probability(p);
    double q = 0.0;
    if (p == 1.0)
        q = 1.0;
    else if (p > 0.0)
        q = solve_round_probability(p, 2);
    const double s = 1.0 - (1.0 - q) * (1.0 - q);

    RainbowPipelineResult result{false,
                                 std::nullopt,
                                 std::nullopt,
                                 p,
                                 q,
                                 s,
                                 RainbowExposure{gen_colored_graph(n, p / 2.0, n, seed.derive("first")),
                                                 gen_colored_digraph(n, q, n, seed.derive("second"))},
                                 std::nullopt};
    if (result.exposure.first.edges().empty()) return result;

    const ColoredEdge& estar = result.exposure.first.edges().front();
    result.contraction.emplace(n, estar.u, estar.v, estar.color, q);
    const ColoredDigraph contracted = contract_colored(result.exposure.second, *result.contraction);
    if (auto w = find_rainbow_dir_hc(contracted, limits)) {
        result.found = true;
        result.witness = lift_colored(*w, *result.contraction);
        result.contractedWitness = std::move(w);
    }
    return result;
}

DirectRainbowResult direct_rainbow(int n, double p, const Seed& seed, const OracleLimits& limits) {
    if (n < 4 || n % 2 != 0) throw ParameterError("direct rainbow search is the even-n path");
    DirectRainbowResult result{false, std::nullopt, gen_colored_graph(n, p, n, seed.derive("direct"))};
    result.witness = find_rainbow_hc(result.graph, limits);
    result.found = result.witness.has_value();
    return result;
}

}  // namespace hamlab
