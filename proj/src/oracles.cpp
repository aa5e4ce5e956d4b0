#include "hamlab/oracles.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "hamlab/errors.hpp"

namespace hamlab {

namespace {

using Mask = std::uint64_t;

// Memo keys pack (used, current, start) into 64 bits, which bounds n.
constexpr int kHardMaxN = 52;

constexpr Mask bit(VertexId v) { return Mask{1} << v; }

Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

Tuple mask_to_tuple(Mask m) {
    Tuple t;
    while (m) {
        t.push_back(static_cast<VertexId>(std::countr_zero(m)));
        m &= m - 1;
    }
    return t;
}

void guard(int n, int limit, const char* what) {
    if (n > std::min(limit, kHardMaxN))
        throw CapacityError(std::string(what) + ": n=" + std::to_string(n) + " exceeds the size guard of " +
                            std::to_string(std::min(limit, kHardMaxN)));
}

bool loose_size_feasible(int n, int k) {
    if ((n % (k - 1)) != 0) return false;
    return n / (k - 1) >= 3;
}

// Undirected loose cycles. A partial cycle is a path of edges starting at link
// `start`; its state is the covered vertex set plus the current open link.
class LooseSearch {
public:
    explicit LooseSearch(const Hypergraph& h) : n_(h.n()), k_(h.k()), full_(full_mask(h.n())) {
        incident_.resize(static_cast<std::size_t>(n_));
        for (const auto& e : h.edges()) {
            Mask m = 0;
            for (VertexId v : e) m |= bit(v);
            const auto idx = static_cast<std::uint32_t>(masks_.size());
            masks_.push_back(m);
            edgeSet_.insert(m);
            for (VertexId v : e) incident_[v].push_back(idx);
        }
    }

    bool has_isolated_vertex() const {
        return std::any_of(incident_.begin(), incident_.end(), [](const auto& l) { return l.empty(); });
    }

    VertexId min_degree_vertex() const {
        VertexId best = 0;
        for (VertexId v = 1; v < static_cast<VertexId>(n_); ++v)
            if (incident_[v].size() < incident_[best].size()) best = v;
        return best;
    }

    std::optional<LooseCycle> find() {
        const VertexId root = min_degree_vertex();
        for (std::uint32_t e0 : incident_[root]) {
            const Mask m0 = masks_[e0];
            for (Mask a = m0; a; a &= a - 1) {
                const auto l0 = static_cast<VertexId>(std::countr_zero(a));
                for (Mask b = m0 & ~bit(l0); b; b &= b - 1) {
                    const auto l1 = static_cast<VertexId>(std::countr_zero(b));
                    start_ = l0;
                    path_.assign(1, m0);
                    if (extend(m0, l1)) {
                        LooseCycle w;
                        for (Mask m : path_) w.edgeSeq.push_back(mask_to_tuple(m));
                        return w;
                    }
                }
            }
        }
        return std::nullopt;
    }

    // Each cycle is counted once per direction from its smallest link.
    std::uint64_t count() {
        std::uint64_t total = 0;
        for (VertexId l0 = 0; l0 < static_cast<VertexId>(n_); ++l0) {
            start_ = l0;
            counts_.clear();
            for (std::uint32_t e0 : incident_[l0]) {
                const Mask m0 = masks_[e0];
                for (Mask b = m0 & ~bit(l0); b; b &= b - 1) {
                    const auto l1 = static_cast<VertexId>(std::countr_zero(b));
                    if (l1 > l0) total += count_from(m0, l1);
                }
            }
        }
        return total / 2;
    }

private:
    Mask key(Mask used, VertexId cur) const {
        return used | (static_cast<Mask>(cur) << n_) | (static_cast<Mask>(start_) << (n_ + 6));
    }

    bool extend(Mask used, VertexId cur) {
        const Mask remaining = full_ & ~used;
        if (std::popcount(remaining) == k_ - 2) {
            const Mask closing = remaining | bit(cur) | bit(start_);
            if (!edgeSet_.contains(closing)) return false;
            path_.push_back(closing);
            return true;
        }
        const Mask memoKey = key(used, cur);
        if (failed_.contains(memoKey)) return false;
        for (std::uint32_t e : incident_[cur]) {
            const Mask em = masks_[e];
            if ((em & used) != bit(cur)) continue;
            path_.push_back(em);
            for (Mask b = em & ~bit(cur); b; b &= b - 1) {
                if (extend(used | em, static_cast<VertexId>(std::countr_zero(b)))) return true;
            }
            path_.pop_back();
        }
        failed_.insert(memoKey);
        return false;
    }

    std::uint64_t count_from(Mask used, VertexId cur) {
        const Mask remaining = full_ & ~used;
        if (std::popcount(remaining) == k_ - 2) return edgeSet_.contains(remaining | bit(cur) | bit(start_)) ? 1 : 0;
        const Mask memoKey = key(used, cur);
        if (auto it = counts_.find(memoKey); it != counts_.end()) return it->second;
        std::uint64_t total = 0;
        for (std::uint32_t e : incident_[cur]) {
            const Mask em = masks_[e];
            if ((em & used) != bit(cur)) continue;
            for (Mask b = em & ~bit(cur); b; b &= b - 1) {
                const auto next = static_cast<VertexId>(std::countr_zero(b));
                if (next > start_) total += count_from(used | em, next);
            }
        }
        counts_.emplace(memoKey, total);
        return total;
    }

    int n_;
    int k_;
    Mask full_;
    std::vector<Mask> masks_;
    std::vector<std::vector<std::uint32_t>> incident_;
    std::unordered_set<Mask> edgeSet_;
    VertexId start_ = 0;
    std::vector<Mask> path_;
    std::unordered_set<Mask> failed_;
    std::unordered_map<Mask, std::uint64_t> counts_;
};

class DirLooseSearch {
public:
    explicit DirLooseSearch(const DirHypergraph& d)
        : n_(d.n()), k_(d.k()), full_(full_mask(d.n())), out_(static_cast<std::size_t>(d.n())),
          inDegree_(static_cast<std::size_t>(d.n()), 0) {
        for (const auto& a : d.arcs()) {
            Mask interior = 0;
            for (std::size_t t = 1; t + 1 < a.size(); ++t) interior |= bit(a[t]);
            out_[a.front()].push_back({interior, a.back(), &a});
            ++inDegree_[a.back()];
        }
    }

    bool can_be_link(VertexId v) const { return !out_[v].empty() && inDegree_[v] > 0; }

    std::optional<DirLooseCycle> find_from(VertexId l0) {
        if (!can_be_link(l0)) return std::nullopt;
        start_ = l0;
        path_.clear();
        if (!extend(bit(l0), l0)) return std::nullopt;
        DirLooseCycle w;
        for (const Tuple* a : path_) w.arcSeq.push_back(*a);
        return w;
    }

    // Vertex 0 is a link or sits inside some arc whose first vertex is a link.
    std::vector<VertexId> start_candidates() const {
        std::vector<VertexId> out{0};
        for (VertexId v = 0; v < static_cast<VertexId>(n_); ++v)
            for (const auto& a : out_[v])
                if (a.interior & bit(0)) out.push_back(v);
        std::sort(out.begin() + 1, out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

private:
    struct OutArc {
        Mask interior;
        VertexId last;
        const Tuple* arc;
    };

    bool extend(Mask used, VertexId cur) {
        const Mask remaining = full_ & ~used;
        if (std::popcount(remaining) == k_ - 2) {
            for (const auto& a : out_[cur]) {
                if (a.interior == remaining && a.last == start_) {
                    path_.push_back(a.arc);
                    return true;
                }
            }
            return false;
        }
        const Mask memoKey =
            used | (static_cast<Mask>(cur) << n_) | (static_cast<Mask>(start_) << (n_ + 6));
        if (failed_.contains(memoKey)) return false;
        for (const auto& a : out_[cur]) {
            const Mask add = a.interior | bit(a.last);
            if (add & used) continue;
            path_.push_back(a.arc);
            if (extend(used | add, a.last)) return true;
            path_.pop_back();
        }
        failed_.insert(memoKey);
        return false;
    }

    int n_;
    int k_;
    Mask full_;
    std::vector<std::vector<OutArc>> out_;
    std::vector<std::uint32_t> inDegree_;
    VertexId start_ = 0;
    std::vector<const Tuple*> path_;
    std::unordered_set<Mask> failed_;
};

using ColorMask = unsigned __int128;

struct RainbowKey {
    Mask vertices;
    ColorMask colors;
    friend bool operator==(const RainbowKey&, const RainbowKey&) = default;
};

struct RainbowKeyHash {
    std::size_t operator()(const RainbowKey& key) const {
        std::uint64_t h = key.vertices * 0x9e3779b97f4a7c15ULL;
        h ^= static_cast<std::uint64_t>(key.colors) + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2);
        h ^= static_cast<std::uint64_t>(key.colors >> 64) + 0x94d049bb133111ebULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// Rainbow Hamilton cycle search over a dense color matrix. Colors are
// compressed to the ones that actually occur so a 128-bit mask suffices.
class RainbowSearch {
public:
    RainbowSearch(int n, const std::vector<ColoredEdge>& elements, bool directed)
        : n_(n), full_(full_mask(n)), matrix_(static_cast<std::size_t>(n * n), -1) {
        for (const auto& e : elements) {
            auto [it, inserted] = dense_.emplace(e.color, static_cast<int>(original_.size()));
            if (inserted) original_.push_back(e.color);
            matrix_[e.u * static_cast<std::size_t>(n) + e.v] = it->second;
            if (!directed) matrix_[e.v * static_cast<std::size_t>(n) + e.u] = it->second;
        }
    }

    std::size_t distinct_colors() const { return original_.size(); }

    std::optional<RainbowCycle> find() {
        if (original_.size() > 128) throw CapacityError("rainbow search supports at most 128 distinct colors");
        vertices_.assign(1, 0);
        colors_.clear();
        if (!extend(bit(0), 0, 0)) return std::nullopt;
        RainbowCycle w;
        w.vertexSeq = vertices_;
        for (int c : colors_) w.colorSeq.push_back(original_[static_cast<std::size_t>(c)]);
        return w;
    }

private:
    int color(VertexId u, VertexId v) const { return matrix_[u * static_cast<std::size_t>(n_) + v]; }

    bool extend(Mask visited, VertexId cur, ColorMask used) {
        if (visited == full_) {
            const int c = color(cur, 0);
            if (c < 0 || ((used >> c) & 1)) return false;
            colors_.push_back(c);
            return true;
        }
        const RainbowKey memoKey{visited | (static_cast<Mask>(cur) << n_), used};
        if (failed_.contains(memoKey)) return false;
        for (VertexId v = 0; v < static_cast<VertexId>(n_); ++v) {
            if (visited & bit(v)) continue;
            const int c = color(cur, v);
            if (c < 0 || ((used >> c) & 1)) continue;
            vertices_.push_back(v);
            colors_.push_back(c);
            if (extend(visited | bit(v), v, used | (ColorMask{1} << c))) return true;
            vertices_.pop_back();
            colors_.pop_back();
        }
        failed_.insert(memoKey);
        return false;
    }

    int n_;
    Mask full_;
    std::vector<int> matrix_;
    std::unordered_map<Color, int> dense_;
    std::vector<Color> original_;
    std::vector<VertexId> vertices_;
    std::vector<int> colors_;
    std::unordered_set<RainbowKey, RainbowKeyHash> failed_;
};

template <typename Graph>
std::optional<RainbowCycle> find_rainbow(const Graph& g, const std::vector<ColoredEdge>& elements, bool directed,
                                         const OracleLimits& limits) {
    const int n = g.n();
    guard(n, limits.maxRainbowN, "rainbow Hamilton cycle search");
    if (n < 3 || g.c() < n) return std::nullopt;
    RainbowSearch search(n, elements, directed);
    if (search.distinct_colors() < static_cast<std::size_t>(n)) return std::nullopt;
    return search.find();
}

}  // namespace

std::optional<LooseCycle> find_loose_hc(const Hypergraph& h, const OracleLimits& limits) {
    if (!loose_size_feasible(h.n(), h.k())) return std::nullopt;
    guard(h.n(), limits.maxLooseN, "loose Hamilton cycle search");
    LooseSearch search(h);
    if (search.has_isolated_vertex()) return std::nullopt;
    return search.find();
}

std::optional<DirLooseCycle> find_dir_loose_hc(const DirHypergraph& d, std::optional<VertexId> requiredLink,
                                               const OracleLimits& limits) {
    if (requiredLink && *requiredLink >= static_cast<VertexId>(d.n()))
        throw ParameterError("required link vertex out of range");
    if (!loose_size_feasible(d.n(), d.k())) return std::nullopt;
    guard(d.n(), limits.maxLooseN, "directed loose Hamilton cycle search");
    DirLooseSearch search(d);
    if (requiredLink) return search.find_from(*requiredLink);
    for (VertexId l0 : search.start_candidates())
        if (auto w = search.find_from(l0)) return w;
    return std::nullopt;
}

std::optional<RainbowCycle> find_rainbow_hc(const ColoredGraph& g, const OracleLimits& limits) {
    return find_rainbow(g, g.edges(), false, limits);
}

std::optional<RainbowCycle> find_rainbow_dir_hc(const ColoredDigraph& g, const OracleLimits& limits) {
    return find_rainbow(g, g.arcs(), true, limits);
}

std::uint64_t count_loose_hc(const Hypergraph& h, const OracleLimits& limits) {
    if (!loose_size_feasible(h.n(), h.k())) return 0;
    guard(h.n(), limits.maxCountN, "loose Hamilton cycle count");
    LooseSearch search(h);
    if (search.has_isolated_vertex()) return 0;
    return search.count();
}

}  // namespace hamlab
