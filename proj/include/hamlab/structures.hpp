#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hamlab {

// Vertices are indices in [0, n) of the enclosing structure.
using VertexId = std::uint32_t;
using Color = std::uint32_t;
// A k-tuple of vertices: sorted when it stands for an unordered edge, in
// traversal order when it stands for an arc.
using Tuple = std::vector<VertexId>;

// k-uniform hypergraph; edges are stored sorted and in lexicographic order.
class Hypergraph {
public:
    Hypergraph(int n, int k);
    Hypergraph(int n, int k, std::vector<Tuple> edges);

    int n() const { return n_; }
    int k() const { return k_; }
    const std::vector<Tuple>& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    // Order of the entries in `edge` is irrelevant.
    bool contains(std::span<const VertexId> edge) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int n_;
    int k_;
    std::vector<Tuple> edges_;
};

// Directed k-uniform hypergraph: arcs are ordered k-tuples of distinct vertices.
class DirHypergraph {
public:
    DirHypergraph(int n, int k);
    DirHypergraph(int n, int k, std::vector<Tuple> arcs);

    int n() const { return n_; }
    int k() const { return k_; }
    const std::vector<Tuple>& arcs() const { return arcs_; }
    std::size_t size() const { return arcs_.size(); }
    bool empty() const { return arcs_.empty(); }

    bool contains(std::span<const VertexId> arc) const;

    // Forget orientations: an edge is present iff at least one of its orderings is.
    Hypergraph underlying() const;

    friend bool operator==(const DirHypergraph&, const DirHypergraph&) = default;

private:
    int n_;
    int k_;
    std::vector<Tuple> arcs_;
};

struct ColoredEdge {
    VertexId u;
    VertexId v;
    Color color;

    friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

// Simple graph with one color in [0, c) per edge; stored with u < v.
class ColoredGraph {
public:
    ColoredGraph(int n, int c);
    ColoredGraph(int n, int c, std::vector<ColoredEdge> edges);

    int n() const { return n_; }
    int c() const { return c_; }
    const std::vector<ColoredEdge>& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }

    std::optional<Color> color(VertexId u, VertexId v) const;

    friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

private:
    int n_;
    int c_;
    std::vector<ColoredEdge> edges_;
};

// Digraph with one color per arc; u -> v and v -> u are independent elements.
class ColoredDigraph {
public:
    ColoredDigraph(int n, int c);
    ColoredDigraph(int n, int c, std::vector<ColoredEdge> arcs);

    int n() const { return n_; }
    int c() const { return c_; }
    const std::vector<ColoredEdge>& arcs() const { return arcs_; }
    std::size_t size() const { return arcs_.size(); }

    std::optional<Color> color(VertexId from, VertexId to) const;

    friend bool operator==(const ColoredDigraph&, const ColoredDigraph&) = default;

private:
    int n_;
    int c_;
    std::vector<ColoredEdge> arcs_;
};

// Cyclic sequence of edges (each sorted); consecutive edges share exactly one vertex.
struct LooseCycle {
    std::vector<Tuple> edgeSeq;
    friend bool operator==(const LooseCycle&, const LooseCycle&) = default;
};

// Cyclic sequence of arcs; the last vertex of each arc is the first of the next.
struct DirLooseCycle {
    std::vector<Tuple> arcSeq;
    friend bool operator==(const DirLooseCycle&, const DirLooseCycle&) = default;
};

// colorSeq[i] is the color of the edge/arc vertexSeq[i] -> vertexSeq[i + 1 mod n].
struct RainbowCycle {
    std::vector<VertexId> vertexSeq;
    std::vector<Color> colorSeq;
    friend bool operator==(const RainbowCycle&, const RainbowCycle&) = default;
};

// Link vertices of a loose cycle: links[i] is the vertex shared by edges i and i+1.
// Returns nullopt when some consecutive pair does not share exactly one vertex.
std::optional<std::vector<VertexId>> loose_cycle_links(const LooseCycle& w);

// Rotate so the smallest link leads and orient toward its smaller neighboring link.
// Two witnesses describe the same cycle iff their canonical forms are equal.
LooseCycle canonical(const LooseCycle& w);

// Apply a vertex permutation (perm[v] is the new label of v).
Hypergraph relabel(const Hypergraph& h, std::span<const VertexId> perm);
DirHypergraph relabel(const DirHypergraph& d, std::span<const VertexId> perm);
LooseCycle relabel(const LooseCycle& w, std::span<const VertexId> perm);
DirLooseCycle relabel(const DirLooseCycle& w, std::span<const VertexId> perm);

}  // namespace hamlab
