#include "hamlab/structures.hpp"

#include <algorithm>
#include <string>

#include "hamlab/errors.hpp"

namespace hamlab {

namespace {

void check_shape(int n, int k) {
    if (n < 0) throw ParameterError("vertex count must be non-negative");
    if (k < 2) throw ParameterError("uniformity k must be at least 2, got " + std::to_string(k));
}

void check_tuple(const Tuple& t, int n, int k, const char* what) {
    if (static_cast<int>(t.size()) != k)
        throw ParameterError(std::string(what) + " has " + std::to_string(t.size()) + " vertices, expected " +
                             std::to_string(k));
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] >= static_cast<VertexId>(n))
            throw ParameterError(std::string(what) + " vertex " + std::to_string(t[i]) + " out of range");
        for (std::size_t j = 0; j < i; ++j)
            if (t[i] == t[j]) throw ParameterError(std::string(what) + " repeats vertex " + std::to_string(t[i]));
    }
}

template <typename T, typename Less>
void sort_unique_or_throw(std::vector<T>& items, Less less, const char* what) {
    std::sort(items.begin(), items.end(), less);
    for (std::size_t i = 1; i < items.size(); ++i)
        if (!less(items[i - 1], items[i])) throw ParameterError(std::string("duplicate ") + what);
}

bool pair_less(const ColoredEdge& a, const ColoredEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
}

void check_colored(const ColoredEdge& e, int n, int c) {
    if (e.u >= static_cast<VertexId>(n) || e.v >= static_cast<VertexId>(n))
        throw ParameterError("colored element endpoint out of range");
    if (e.u == e.v) throw ParameterError("loops are not allowed");
    if (e.color >= static_cast<Color>(c)) throw ParameterError("color " + std::to_string(e.color) + " out of range");
}

std::optional<Color> find_color(const std::vector<ColoredEdge>& items, VertexId u, VertexId v) {
    const ColoredEdge probe{u, v, 0};
    auto it = std::lower_bound(items.begin(), items.end(), probe, pair_less);
    if (it != items.end() && it->u == u && it->v == v) return it->color;
    return std::nullopt;
}

}  // namespace

Hypergraph::Hypergraph(int n, int k) : n_(n), k_(k) { check_shape(n, k); }

Hypergraph::Hypergraph(int n, int k, std::vector<Tuple> edges) : n_(n), k_(k), edges_(std::move(edges)) {
    check_shape(n, k);
    for (auto& e : edges_) {
        check_tuple(e, n, k, "edge");
        std::sort(e.begin(), e.end());
    }
    sort_unique_or_throw(edges_, std::less<Tuple>{}, "edge");
}

bool Hypergraph::contains(std::span<const VertexId> edge) const {
    Tuple key(edge.begin(), edge.end());
    std::sort(key.begin(), key.end());
    return std::binary_search(edges_.begin(), edges_.end(), key);
}

DirHypergraph::DirHypergraph(int n, int k) : n_(n), k_(k) { check_shape(n, k); }

DirHypergraph::DirHypergraph(int n, int k, std::vector<Tuple> arcs) : n_(n), k_(k), arcs_(std::move(arcs)) {
    check_shape(n, k);
    for (const auto& a : arcs_) check_tuple(a, n, k, "arc");
    sort_unique_or_throw(arcs_, std::less<Tuple>{}, "arc");
}

bool DirHypergraph::contains(std::span<const VertexId> arc) const {
    const Tuple key(arc.begin(), arc.end());
    return std::binary_search(arcs_.begin(), arcs_.end(), key);
}

Hypergraph DirHypergraph::underlying() const {
    std::vector<Tuple> edges;
    edges.reserve(arcs_.size());
    for (const auto& a : arcs_) {
        Tuple e = a;
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Hypergraph(n_, k_, std::move(edges));
}

ColoredGraph::ColoredGraph(int n, int c) : n_(n), c_(c) {
    if (n < 0) throw ParameterError("vertex count must be non-negative");
    if (c < 1) throw ParameterError("color count must be at least 1");
}

ColoredGraph::ColoredGraph(int n, int c, std::vector<ColoredEdge> edges) : ColoredGraph(n, c) {
    edges_ = std::move(edges);
    for (auto& e : edges_) {
        check_colored(e, n, c);
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    sort_unique_or_throw(edges_, pair_less, "edge");
}

std::optional<Color> ColoredGraph::color(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    return find_color(edges_, u, v);
}

ColoredDigraph::ColoredDigraph(int n, int c) : n_(n), c_(c) {
    if (n < 0) throw ParameterError("vertex count must be non-negative");
    if (c < 1) throw ParameterError("color count must be at least 1");
}

ColoredDigraph::ColoredDigraph(int n, int c, std::vector<ColoredEdge> arcs) : ColoredDigraph(n, c) {
    arcs_ = std::move(arcs);
    for (const auto& a : arcs_) check_colored(a, n, c);
    sort_unique_or_throw(arcs_, pair_less, "arc");
}

std::optional<Color> ColoredDigraph::color(VertexId from, VertexId to) const {
    return find_color(arcs_, from, to);
}

std::optional<std::vector<VertexId>> loose_cycle_links(const LooseCycle& w) {
    const std::size_t m = w.edgeSeq.size();
    if (m < 2) return std::nullopt;
    std::vector<VertexId> links;
    links.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Tuple& a = w.edgeSeq[i];
        const Tuple& b = w.edgeSeq[(i + 1) % m];
        std::optional<VertexId> shared;
        int count = 0;
        for (VertexId x : a)
            if (std::find(b.begin(), b.end(), x) != b.end()) {
                shared = x;
                ++count;
            }
        if (count != 1) return std::nullopt;
        links.push_back(*shared);
    }
    return links;
}

LooseCycle canonical(const LooseCycle& w) {
    const auto links = loose_cycle_links(w);
    LooseCycle out;
    if (!links) {
        out = w;
        for (auto& e : out.edgeSeq) std::sort(e.begin(), e.end());
        return out;
    }
    const std::size_t m = w.edgeSeq.size();
    const std::size_t a = static_cast<std::size_t>(std::min_element(links->begin(), links->end()) - links->begin());
    // links[a] joins edges a and a+1. Forward from edge a+1 its other link is
    // links[a+1]; backward from edge a it is links[a-1].
    const VertexId forwardNext = (*links)[(a + 1) % m];
    const VertexId backwardNext = (*links)[(a + m - 1) % m];
    out.edgeSeq.reserve(m);
    if (forwardNext <= backwardNext) {
        for (std::size_t i = 0; i < m; ++i) out.edgeSeq.push_back(w.edgeSeq[(a + 1 + i) % m]);
    } else {
        for (std::size_t i = 0; i < m; ++i) out.edgeSeq.push_back(w.edgeSeq[(a + m - i) % m]);
    }
    for (auto& e : out.edgeSeq) std::sort(e.begin(), e.end());
    return out;
}

namespace {

Tuple map_tuple(const Tuple& t, std::span<const VertexId> perm) {
    Tuple out;
    out.reserve(t.size());
    for (VertexId v : t) out.push_back(perm[v]);
    return out;
}

}  // namespace

Hypergraph relabel(const Hypergraph& h, std::span<const VertexId> perm) {
    std::vector<Tuple> edges;
    edges.reserve(h.size());
    for (const auto& e : h.edges()) edges.push_back(map_tuple(e, perm));
    return Hypergraph(h.n(), h.k(), std::move(edges));
}

DirHypergraph relabel(const DirHypergraph& d, std::span<const VertexId> perm) {
    std::vector<Tuple> arcs;
    arcs.reserve(d.size());
    for (const auto& a : d.arcs()) arcs.push_back(map_tuple(a, perm));
    return DirHypergraph(d.n(), d.k(), std::move(arcs));
}

LooseCycle relabel(const LooseCycle& w, std::span<const VertexId> perm) {
    LooseCycle out;
    for (const auto& e : w.edgeSeq) {
        Tuple t = map_tuple(e, perm);
        std::sort(t.begin(), t.end());
        out.edgeSeq.push_back(std::move(t));
    }
    return out;
}

DirLooseCycle relabel(const DirLooseCycle& w, std::span<const VertexId> perm) {
    DirLooseCycle out;
    for (const auto& a : w.arcSeq) out.arcSeq.push_back(map_tuple(a, perm));
    return out;
}

}  // namespace hamlab
