#include <doctest.h>

#include <cmath>
#include <map>

#include "hamlab/combinatorics.hpp"
#include "hamlab/coupling.hpp"
#include "hamlab/errors.hpp"
#include "hamlab/generators.hpp"
#include "support/brute_force.hpp"

using namespace hamlab;

namespace {

// Pr[event] under Gamma_i on 4 vertices with k = 2, enumerating the 2^6 pair
// choices and, for split pairs, both arcs separately.
double brute_chain_n4(double p, std::uint64_t i, bool directed) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) pairs.emplace_back(u, v);
    std::vector<std::pair<int, int>> vars;  // (pair index, -1 both / 0 forward / 1 backward)
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        if (j < i) {
            vars.emplace_back(static_cast<int>(j), 0);
            vars.emplace_back(static_cast<int>(j), 1);
        } else {
            vars.emplace_back(static_cast<int>(j), -1);
        }
    }
    double total = 0.0;
    const std::uint32_t count = static_cast<std::uint32_t>(vars.size());
    for (std::uint32_t mask = 0; mask < (1u << count); ++mask) {
        std::vector<std::vector<char>> adj(4, std::vector<char>(4, 0));
        double w = 1.0;
        for (std::uint32_t b = 0; b < count; ++b) {
            const bool on = (mask >> b) & 1;
            w *= on ? p : 1.0 - p;
            if (!on) continue;
            const auto [j, dir] = vars[b];
            const auto [u, v] = pairs[static_cast<std::size_t>(j)];
            if (dir != 1 || !directed) adj[u][v] = 1;
            if (dir != 0 || !directed) adj[v][u] = 1;
        }
        if (brute::has_hamilton_cycle(4, adj)) total += w;
    }
    return total;
}

}  // namespace

TEST_CASE("complete chain samples contain every arc") {
    for (std::uint64_t i = 0; i <= 6; ++i) CHECK(chain_sample(4, 2, 1.0, i, Seed(1)).structure.arcs().size() == 12);
    CHECK(chain_sample(5, 3, 1.0, 4, Seed(1)).structure.arcs().size() == 60);
    CHECK(chain_sample(5, 3, 0.0, 4, Seed(1)).structure.arcs().empty());
    CHECK_THROWS_AS(chain_sample(4, 2, 0.5, 7, Seed(1)), ParameterError);
}

TEST_CASE("unsplit slots are all-or-none, split orientations are independent") {
    const int n = 5;
    const int k = 3;
    const std::uint64_t slots = binomial(n, k);
    const int trials = 20000;
    const double p = 0.3;
    std::vector<int> orientationsPresent(7, 0);
    int first = 0;
    int second = 0;
    int both = 0;
    for (int t = 0; t < trials; ++t) {
        const auto unsplit = chain_sample(n, k, p, 0, Seed(2).derive(t)).structure;
        std::map<Tuple, int> perSlot;
        for (const auto& a : unsplit.arcs()) ++perSlot[sorted_copy(a)];
        for (const auto& [slot, count] : perSlot) CHECK(count == 6);

        const auto split = chain_sample(n, k, p, slots, Seed(3).derive(t)).structure;
        int present = 0;
        for_each_orientation(Tuple{0, 1, 2}, [&](std::uint32_t r, const Tuple& arc) {
            const bool on = split.contains(arc);
            present += on;
            if (r == 0) first += on;
            if (r == 1) second += on;
            if (r == 1 && on && split.contains(Tuple{0, 1, 2})) ++both;
        });
        ++orientationsPresent[static_cast<std::size_t>(present)];
    }
    const double sigma = std::sqrt(p * (1 - p) / trials);
    CHECK(std::abs(first / double(trials) - p) < 4 * sigma);
    CHECK(std::abs(second / double(trials) - p) < 4 * sigma);
    CHECK(std::abs(both / double(trials) - p * p) < 4 * std::sqrt(p * p * (1 - p * p) / trials));
    // Binomial(6, p) law for the number of orientations present.
    for (int m = 0; m <= 6; ++m) {
        const double expected = static_cast<double>(binomial(6, m)) * std::pow(p, m) * std::pow(1 - p, 6 - m);
        CHECK(std::abs(orientationsPresent[static_cast<std::size_t>(m)] / double(trials) - expected) <
              4 * std::sqrt(expected * (1 - expected) / trials) + 1e-9);
    }
}

TEST_CASE("chain endpoints reproduce the generators bit for bit") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const Seed seed = Seed(4).derive(s);
        for (const auto& [n, k] : {std::pair{6, 3}, std::pair{5, 2}, std::pair{7, 4}}) {
            const double p = 0.05 + 0.01 * static_cast<double>(s);
            CHECK(chain_sample(n, k, p, 0, seed).structure.underlying() == gen_hyper(n, k, p, seed));
            CHECK(chain_sample(n, k, p, binomial(n, k), seed).structure == gen_dir_hyper(n, k, p, seed));
        }
        const auto start = chain_sample_colored(6, 0.5, 6, 0, seed).structure;
        const auto graph = gen_colored_graph(6, 0.5, 6, seed);
        std::vector<ColoredEdge> forward;
        for (const auto& a : start.arcs())
            if (a.u < a.v) forward.push_back(a);
        CHECK(forward == graph.edges());
        CHECK(chain_sample_colored(6, 0.5, 6, 15, seed).structure == gen_colored_digraph(6, 0.5, 6, seed));
    }
}

TEST_CASE("colored chain: shared colors at i = 0, independent colors at i = N") {
    const int n = 6;
    const int c = 5;
    int pairsSeen = 0;
    int sameColor = 0;
    for (std::uint64_t t = 0; t < 4000; ++t) {
        const auto g0 = chain_sample_colored(n, 0.5, c, 0, Seed(5).derive(t)).structure;
        for (const auto& a : g0.arcs()) {
            const auto back = g0.color(a.v, a.u);
            REQUIRE(back);
            CHECK(*back == a.color);
        }
        const auto gN = chain_sample_colored(n, 1.0, c, 15, Seed(6).derive(t)).structure;
        const auto forward = gN.color(0, 1);
        const auto backward = gN.color(1, 0);
        REQUIRE(forward);
        REQUIRE(backward);
        ++pairsSeen;
        sameColor += *forward == *backward;
    }
    const double rate = sameColor / double(pairsSeen);
    CHECK(std::abs(rate - 1.0 / c) < 4 * std::sqrt(0.2 * 0.8 / pairsSeen));
}

TEST_CASE("exact chain probabilities match the brute-force values on 4 vertices") {
    CHECK(brute::hamiltonian_count_n4(false) == 10);
    CHECK(brute::hamiltonian_count_n4(true) == 1194);
    CHECK(exact_event_probability(4, 2, 0.5, 0, ChainEvent::DirHC) == doctest::Approx(10.0 / 64).epsilon(1e-12));
    CHECK(exact_event_probability(4, 2, 0.5, 6, ChainEvent::DirHC) == doctest::Approx(1194.0 / 4096).epsilon(1e-12));

    const double frozen[3][3] = {{0.2, 0.004672, 0.009443807232},
                                 {0.5, 0.15625, 0.29150390625},
                                 {0.8, 0.704512, 0.906579935232002}};
    for (const auto& row : frozen) {
        CHECK(exact_event_probability(4, 2, row[0], 0, ChainEvent::DirHC) == doctest::Approx(row[1]).epsilon(1e-9));
        CHECK(exact_event_probability(4, 2, row[0], 6, ChainEvent::DirHC) == doctest::Approx(row[2]).epsilon(1e-9));
        for (std::uint64_t i = 0; i <= 6; ++i) {
            CHECK(exact_event_probability(4, 2, row[0], i, ChainEvent::DirHC) ==
                  doctest::Approx(brute_chain_n4(row[0], i, true)).epsilon(1e-12));
            CHECK(exact_event_probability(4, 2, row[0], i, ChainEvent::LooseHC) ==
                  doctest::Approx(brute_chain_n4(row[0], i, false)).epsilon(1e-12));
        }
    }
}

TEST_CASE("exact chain rows are nondecreasing in i") {
    for (double p : {0.2, 0.5, 0.8}) {
        double previous = 0.0;
        for (std::uint64_t i = 0; i <= 6; ++i) {
            const double value = exact_event_probability(4, 2, p, i, ChainEvent::DirHC);
            CHECK(value >= previous - 1e-12);
            previous = value;
        }
    }
    for (double p : {0.0, 1.0}) {
        for (std::uint64_t i = 0; i <= 6; ++i) {
            CHECK(exact_event_probability(4, 2, p, i, ChainEvent::DirHC) == p);
            CHECK(exact_event_probability(4, 2, p, i, ChainEvent::LooseHC) == p);
        }
    }
    CHECK(exact_event_probability(6, 3, 1.0, 0, ChainEvent::LooseHC) == 1.0);
    CHECK(exact_event_probability(6, 3, 1.0, 20, ChainEvent::DirLooseHC) == 1.0);
    CHECK_THROWS_AS(exact_event_probability(6, 3, 0.5, 20, ChainEvent::DirLooseHC), CapacityError);
    CHECK_THROWS_AS(exact_event_probability(6, 3, 0.5, 0, ChainEvent::DirHC), ParameterError);
}

TEST_CASE("step analysis: exactly one case, and splitting never hurts") {
    int needs = 0;
    for (std::uint64_t s = 0; s < 300; ++s) {
        const std::uint64_t i = 1 + s % 20;
        const double p = 0.2 + 0.002 * static_cast<double>(s);
        const StepAnalysis a = analyze_chain_step(6, 3, p, i, Seed(7).derive(s));
        CHECK(a.exclusive_and_exhaustive());
        CHECK(a.probAfter >= a.probBefore - 1e-12);
        switch (a.stepCase) {
            case StepCase::WithoutSlot:
                CHECK(a.withoutSlot);
                CHECK(a.probBefore == doctest::Approx(1.0));
                CHECK(a.probAfter == doctest::Approx(1.0));
                break;
            case StepCase::NeverEvenWithAll:
                CHECK(a.neverEvenWithAll);
                CHECK(a.probBefore == 0.0);
                CHECK(a.probAfter == 0.0);
                break;
            case StepCase::NeedsSlot:
                ++needs;
                CHECK(a.needsSlot);
                CHECK(a.sufficientOrientation.has_value());
                CHECK(a.probBefore == doctest::Approx(p));
                CHECK(a.probAfter >= p - 1e-12);
                break;
        }
    }
    CHECK(needs > 0);

    const DirHypergraph rest(6, 3, {{2, 3, 4}, {4, 5, 0}});
    const StepAnalysis a = analyze_step(rest, Tuple{0, 1, 2}, 0.5);
    CHECK(a.stepCase == StepCase::NeedsSlot);
    CHECK(a.probBefore == doctest::Approx(0.5));
    // (0, 1, 2) is the only orientation that closes the cycle
    CHECK(a.probAfter == doctest::Approx(0.5));
    CHECK_THROWS_AS(analyze_chain_step(6, 3, 0.5, 0, Seed(1)), ParameterError);
}

TEST_CASE("event frequency along the chain is nondecreasing within sampling error") {
    const int trials = 3000;
    const std::uint64_t slots = binomial(6, 3);
    double previous = -1.0;
    for (std::uint64_t i = 0; i <= slots; i += 5) {
        int hits = 0;
        for (int t = 0; t < trials; ++t)
            hits += chain_event_holds(chain_sample(6, 3, 0.35, i, Seed(8).derive(t)).structure, ChainEvent::DirLooseHC);
        const double rate = hits / double(trials);
        if (previous >= 0) CHECK(rate >= previous - 4 * std::sqrt(0.25 / trials));
        previous = rate;
    }
}
