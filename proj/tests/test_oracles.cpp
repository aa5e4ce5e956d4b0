#include <doctest.h>

#include <chrono>

#include "hamlab/combinatorics.hpp"
#include "hamlab/errors.hpp"
#include "hamlab/experiments.hpp"
#include "hamlab/generators.hpp"
#include "hamlab/oracles.hpp"
#include "hamlab/verify.hpp"
#include "support/brute_force.hpp"

using namespace hamlab;

namespace {

std::vector<std::vector<int>> color_matrix(const ColoredGraph& g) {
    std::vector<std::vector<int>> m(static_cast<std::size_t>(g.n()), std::vector<int>(static_cast<std::size_t>(g.n()), -1));
    for (const auto& e : g.edges()) m[e.u][e.v] = m[e.v][e.u] = static_cast<int>(e.color);
    return m;
}

bool brute_rainbow_directed(const ColoredDigraph& g) {
    const int n = g.n();
    auto order = brute::identity(n);
    do {
        if (order[0] != 0) break;
        std::vector<char> used(static_cast<std::size_t>(g.c()), 0);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            const auto c = g.color(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>((i + 1) % n)]);
            ok = c && !used[*c];
            if (ok) used[*c] = 1;
        }
        if (ok) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

}  // namespace

TEST_CASE("find_loose_hc examples") {
    const Hypergraph complete = gen_hyper(6, 3, 1.0, Seed(0));
    const auto w = find_loose_hc(complete);
    REQUIRE(w);
    CHECK(verify_loose_hc(complete, *w));

    CHECK_FALSE(find_loose_hc(gen_hyper(7, 3, 1.0, Seed(0))));

    const std::vector<Tuple> three{{0, 1, 2}, {2, 3, 4}, {0, 4, 5}};
    CHECK(find_loose_hc(Hypergraph(6, 3, three)));
    for (std::size_t drop = 0; drop < three.size(); ++drop) {
        auto fewer = three;
        fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
        const Hypergraph h(6, 3, fewer);
        CHECK(brute::loose_cycles(h).empty());
        CHECK_FALSE(find_loose_hc(h));
    }
}

TEST_CASE("structures too small for three edges have no loose cycle") {
    CHECK_FALSE(find_loose_hc(gen_hyper(4, 3, 1.0, Seed(0))));
    CHECK_FALSE(find_dir_loose_hc(gen_dir_hyper(4, 3, 1.0, Seed(0))));
    CHECK(count_loose_hc(gen_hyper(4, 3, 1.0, Seed(0))) == 0);
    CHECK_FALSE(find_loose_hc(gen_hyper(2, 2, 1.0, Seed(0))));
    CHECK(find_loose_hc(gen_hyper(3, 2, 1.0, Seed(0))));
}

TEST_CASE("find_dir_loose_hc examples") {
    const DirHypergraph complete = gen_dir_hyper(6, 3, 1.0, Seed(0));
    const auto w = find_dir_loose_hc(complete);
    REQUIRE(w);
    CHECK(verify_dir_loose_hc(complete, *w));

    const DirHypergraph three(6, 3, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}});
    const auto linked = find_dir_loose_hc(three, VertexId{2});
    REQUIRE(linked);
    CHECK(verify_dir_loose_hc(three, *linked));
    CHECK_FALSE(find_dir_loose_hc(three, VertexId{1}));

    // A link starts the following arc, so dropping every arc that starts at 0
    // leaves no cycle through 0 as a link (brute force agrees).
    std::vector<Tuple> arcs;
    for (const auto& a : complete.arcs())
        if (a.front() != 0) arcs.push_back(a);
    const DirHypergraph noOut(6, 3, arcs);
    CHECK_FALSE(brute::has_dir_loose_cycle(noOut, 0));
    CHECK_FALSE(find_dir_loose_hc(noOut, VertexId{0}));
    CHECK(brute::has_dir_loose_cycle(noOut));
    const auto any = find_dir_loose_hc(noOut);
    REQUIRE(any);
    CHECK(verify_dir_loose_hc(noOut, *any));

    CHECK_THROWS_AS(find_dir_loose_hc(three, VertexId{6}), ParameterError);
}

TEST_CASE("find_rainbow_hc examples") {
    const ColoredGraph tri(3, 3, {{0, 1, 0}, {1, 2, 1}, {0, 2, 2}});
    CHECK(find_rainbow_hc(tri));
    CHECK_FALSE(find_rainbow_hc(gen_colored_graph(6, 1.0, 5, Seed(1))));

    // K5 with every edge colored 0 except the 5-cycle 0-2-4-1-3 colored 0..4.
    std::vector<ColoredEdge> edges;
    const VertexId cycle[5] = {0, 2, 4, 1, 3};
    for (VertexId u = 0; u < 5; ++u)
        for (VertexId v = u + 1; v < 5; ++v) edges.push_back({u, v, 0});
    for (Color i = 0; i < 5; ++i) {
        const VertexId a = cycle[i];
        const VertexId b = cycle[(i + 1) % 5];
        for (auto& e : edges)
            if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) e.color = i;
    }
    const ColoredGraph g(5, 5, edges);
    const auto expected = brute::rainbow_cycles(5, color_matrix(g));
    REQUIRE(expected.size() == 1);
    const auto w = find_rainbow_hc(g);
    REQUIRE(w);
    CHECK(verify_rainbow_hc(g, *w));
    std::vector<std::pair<VertexId, VertexId>> found;
    for (std::size_t i = 0; i < 5; ++i) {
        const VertexId a = w->vertexSeq[i];
        const VertexId b = w->vertexSeq[(i + 1) % 5];
        found.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(found.begin(), found.end());
    CHECK(found == *expected.begin());
}

TEST_CASE("count_loose_hc examples") {
    CHECK(count_loose_hc(gen_hyper(6, 3, 1.0, Seed(0))) == 120);
    CHECK(count_loose_hc(gen_hyper(7, 3, 1.0, Seed(0))) == 0);
    CHECK(count_loose_hc(gen_hyper(4, 2, 1.0, Seed(0))) == 3);
    CHECK(count_loose_hc(gen_hyper(5, 2, 1.0, Seed(0))) == 12);  // (5-1)!/2
    CHECK(count_loose_hc(gen_hyper(8, 3, 1.0, Seed(0))) == brute::loose_cycles(gen_hyper(8, 3, 1.0, Seed(0))).size());
}

TEST_CASE("count agrees with brute-force enumeration on random hypergraphs") {
    for (std::uint64_t s = 0; s < 60; ++s) {
        const Hypergraph h = gen_hyper(s % 2 ? 6 : 8, 3, 0.2 + 0.01 * static_cast<double>(s % 30), Seed(50).derive(s));
        CHECK(count_loose_hc(h) == brute::loose_cycles(h).size());
    }
    for (std::uint64_t s = 0; s < 40; ++s) {
        const Hypergraph g = gen_hyper(6, 2, 0.6, Seed(51).derive(s));
        CHECK(count_loose_hc(g) == brute::loose_cycles(g).size());
    }
}

TEST_CASE("find and count agree on 1000 random 3-uniform hypergraphs on 6 vertices") {
    const double ps[] = {0.1, 0.2, 0.3, 0.4, 0.5};
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const Hypergraph h = gen_hyper(6, 3, ps[s % 5], Seed(52).derive(s));
        const auto w = find_loose_hc(h);
        CHECK(w.has_value() == (count_loose_hc(h) > 0));
        if (w) CHECK(verify_loose_hc(h, *w));
    }
}

TEST_CASE("directed finder agrees with brute force, with and without a required link") {
    for (std::uint64_t s = 0; s < 150; ++s) {
        const DirHypergraph d = gen_dir_hyper(6, 3, 0.03 + 0.001 * static_cast<double>(s), Seed(53).derive(s));
        const auto w = find_dir_loose_hc(d);
        CHECK(w.has_value() == brute::has_dir_loose_cycle(d));
        if (w) CHECK(verify_dir_loose_hc(d, *w));
        const VertexId link = static_cast<VertexId>(s % 6);
        const auto wl = find_dir_loose_hc(d, link);
        CHECK(wl.has_value() == brute::has_dir_loose_cycle(d, static_cast<int>(link)));
        if (wl) {
            CHECK(verify_dir_loose_hc(d, *wl));
            bool isLink = false;
            for (const auto& a : wl->arcSeq) isLink = isLink || a.front() == link;
            CHECK(isLink);
        }
    }
    for (std::uint64_t s = 0; s < 100; ++s) {
        const DirHypergraph d = gen_dir_hyper(6, 2, 0.4, Seed(54).derive(s));
        CHECK(find_dir_loose_hc(d).has_value() == brute::has_dir_loose_cycle(d));
    }
}

TEST_CASE("rainbow finders agree with brute force") {
    for (std::uint64_t s = 0; s < 150; ++s) {
        const int n = 5 + static_cast<int>(s % 2);
        const ColoredGraph g = gen_colored_graph(n, 0.8, n + static_cast<int>(s % 3), Seed(55).derive(s));
        const auto w = find_rainbow_hc(g);
        CHECK(w.has_value() == !brute::rainbow_cycles(n, color_matrix(g)).empty());
        if (w) CHECK(verify_rainbow_hc(g, *w));

        const ColoredDigraph dg = gen_colored_digraph(n, 0.7, n, Seed(56).derive(s));
        const auto dw = find_rainbow_dir_hc(dg);
        CHECK(dw.has_value() == brute_rainbow_directed(dg));
        if (dw) CHECK(verify_rainbow_hc(dg, *dw));
    }
}

TEST_CASE("adding edges never turns success into failure") {
    for (std::uint64_t s = 0; s < 200; ++s) {
        const Seed seed = Seed(57).derive(s);
        // same seed, larger p: a superset of edges
        const Hypergraph lo = gen_hyper(8, 3, 0.12, seed);
        const Hypergraph hi = gen_hyper(8, 3, 0.25, seed);
        if (find_loose_hc(lo)) CHECK(find_loose_hc(hi));
        const DirHypergraph dlo = gen_dir_hyper(6, 3, 0.04, seed);
        const DirHypergraph dhi = gen_dir_hyper(6, 3, 0.09, seed);
        if (find_dir_loose_hc(dlo)) CHECK(find_dir_loose_hc(dhi));
    }
}

TEST_CASE("search success is invariant under relabeling") {
    for (std::uint64_t s = 0; s < 150; ++s) {
        const Seed seed = Seed(58).derive(s);
        const auto perm = random_permutation(8, seed.derive("perm"));
        const Hypergraph h = gen_hyper(8, 3, 0.15, seed);
        const Hypergraph hp = relabel(h, perm);
        const auto w = find_loose_hc(h);
        CHECK(w.has_value() == find_loose_hc(hp).has_value());
        if (w) CHECK(verify_loose_hc(hp, relabel(*w, perm)));
        CHECK(count_loose_hc(h) == count_loose_hc(hp));

        const DirHypergraph d = gen_dir_hyper(8, 3, 0.03, seed);
        const auto dw = find_dir_loose_hc(d);
        CHECK(dw.has_value() == find_dir_loose_hc(relabel(d, perm)).has_value());
        if (dw) CHECK(verify_dir_loose_hc(relabel(d, perm), relabel(*dw, perm)));
    }
}

TEST_CASE("size guards raise capacity errors") {
    CHECK_THROWS_AS(find_loose_hc(Hypergraph(26, 3)), CapacityError);
    CHECK_THROWS_AS(find_dir_loose_hc(DirHypergraph(26, 3)), CapacityError);
    CHECK_THROWS_AS(count_loose_hc(Hypergraph(14, 3)), CapacityError);
    CHECK_THROWS_AS(find_rainbow_hc(ColoredGraph(15, 15)), CapacityError);
    CHECK_THROWS_AS(find_rainbow_dir_hc(ColoredDigraph(15, 15)), CapacityError);
    OracleLimits wide;
    wide.maxCountN = 14;
    CHECK(count_loose_hc(Hypergraph(14, 3), wide) == 0);
    // divisibility short-circuits before the guard
    CHECK_FALSE(find_loose_hc(Hypergraph(27, 3)));
}

TEST_CASE("divisibility failures return immediately") {
    const Hypergraph h = gen_hyper(7, 3, 1.0, Seed(0));
    const auto start = std::chrono::steady_clock::now();
    CHECK_FALSE(find_loose_hc(h));
    const auto elapsed = std::chrono::steady_clock::now() - start;
    CHECK(elapsed < std::chrono::milliseconds(5));
}

TEST_CASE("12-vertex loose search finishes on dense and sparse inputs") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        const Hypergraph h = gen_hyper(12, 3, 0.04 + 0.01 * static_cast<double>(s % 10), Seed(59).derive(s));
        if (const auto w = find_loose_hc(h)) CHECK(verify_loose_hc(h, *w));
    }
}
