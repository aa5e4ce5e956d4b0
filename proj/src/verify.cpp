#include "hamlab/verify.hpp"

#include <algorithm>

namespace hamlab {

namespace {

bool well_formed(const Tuple& t, int n, int k) {
    if (static_cast<int>(t.size()) != k) return false;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] >= static_cast<VertexId>(n)) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (t[i] == t[j]) return false;
    }
    return true;
}

std::size_t overlap(const Tuple& a, const Tuple& b) {
    std::size_t count = 0;
    for (VertexId x : a)
        if (std::find(b.begin(), b.end(), x) != b.end()) ++count;
    return count;
}

template <typename Graph>
bool verify_rainbow(const Graph& g, const RainbowCycle& w) {
    const int n = g.n();
    if (n < 3) return false;
    if (static_cast<int>(w.vertexSeq.size()) != n || w.colorSeq.size() != w.vertexSeq.size()) return false;
    std::vector<char> seenVertex(static_cast<std::size_t>(n), 0);
    for (VertexId v : w.vertexSeq) {
        if (v >= static_cast<VertexId>(n) || seenVertex[v]) return false;
        seenVertex[v] = 1;
    }
    std::vector<char> seenColor(static_cast<std::size_t>(g.c()), 0);
    for (std::size_t i = 0; i < w.vertexSeq.size(); ++i) {
        const Color col = w.colorSeq[i];
        if (col >= static_cast<Color>(g.c()) || seenColor[col]) return false;
        seenColor[col] = 1;
        const auto actual = g.color(w.vertexSeq[i], w.vertexSeq[(i + 1) % w.vertexSeq.size()]);
        if (!actual || *actual != col) return false;
    }
    return true;
}

}  // namespace

bool verify_loose_hc(const Hypergraph& h, const LooseCycle& w) {
    const int n = h.n();
    const int k = h.k();
    const std::size_t m = w.edgeSeq.size();
    if (m < 3 || static_cast<int>(m) * (k - 1) != n) return false;
    for (const auto& e : w.edgeSeq)
        if (!well_formed(e, n, k) || !h.contains(e)) return false;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const bool consecutive = j == i + 1 || (i == 0 && j == m - 1);
            if (overlap(w.edgeSeq[i], w.edgeSeq[j]) != (consecutive ? 1u : 0u)) return false;
        }
    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    for (const auto& e : w.edgeSeq)
        for (VertexId v : e) covered[v] = 1;
    if (std::count(covered.begin(), covered.end(), 1) != n) return false;
    // With m == 3 every pair is consecutive; distinct links rule out a vertex shared by all three.
    const auto links = loose_cycle_links(w);
    if (!links) return false;
    auto sortedLinks = *links;
    std::sort(sortedLinks.begin(), sortedLinks.end());
    return std::adjacent_find(sortedLinks.begin(), sortedLinks.end()) == sortedLinks.end();
}

bool verify_dir_loose_hc(const DirHypergraph& d, const DirLooseCycle& w) {
    const int n = d.n();
    const int k = d.k();
    const std::size_t m = w.arcSeq.size();
    if (m < 3 || static_cast<int>(m) * (k - 1) != n) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < m; ++i) {
        const Tuple& arc = w.arcSeq[i];
        if (!well_formed(arc, n, k) || !d.contains(arc)) return false;
        if (arc.back() != w.arcSeq[(i + 1) % m].front()) return false;
        // Count every vertex but the last of each arc; the last is the next arc's first.
        for (std::size_t t = 0; t + 1 < arc.size(); ++t) {
            if (seen[arc[t]]) return false;
            seen[arc[t]] = 1;
        }
    }
    return std::count(seen.begin(), seen.end(), 1) == n;
}

bool verify_rainbow_hc(const ColoredGraph& g, const RainbowCycle& w) { return verify_rainbow(g, w); }

bool verify_rainbow_hc(const ColoredDigraph& g, const RainbowCycle& w) { return verify_rainbow(g, w); }

}  // namespace hamlab
