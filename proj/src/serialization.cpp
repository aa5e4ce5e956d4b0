#include "hamlab/serialization.hpp"

#include "hamlab/errors.hpp"

namespace hamlab {

namespace {

Json tuples_to_json(const std::vector<Tuple>& tuples) {
    Json arr = Json::array();
    for (const auto& t : tuples) arr.push_back(t);
    return arr;
}

Json colored_to_json(const std::vector<ColoredEdge>& items) {
    Json arr = Json::array();
    for (const auto& e : items) arr.push_back(Json{{"ends", {e.u, e.v}}, {"color", e.color}});
    return arr;
}

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

int require_int(const Json& j, const char* key) {
    const Json& v = require(j, key);
    if (!v.is_number_integer()) throw FormatError(std::string("key \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::vector<Tuple> tuples_from_json(const Json& arr) {
    if (!arr.is_array()) throw FormatError("expected an array of vertex tuples");
    std::vector<Tuple> out;
    out.reserve(arr.size());
    for (const auto& t : arr) {
        if (!t.is_array()) throw FormatError("expected a vertex tuple");
        Tuple tuple;
        for (const auto& v : t) {
            if (!v.is_number_unsigned()) throw FormatError("vertex ids must be non-negative integers");
            tuple.push_back(v.get<VertexId>());
        }
        out.push_back(std::move(tuple));
    }
    return out;
}

std::vector<ColoredEdge> colored_from_json(const Json& arr) {
    if (!arr.is_array()) throw FormatError("expected an array of colored elements");
    std::vector<ColoredEdge> out;
    for (const auto& e : arr) {
        const Json& ends = require(e, "ends");
        const Json& color = require(e, "color");
        if (!ends.is_array() || ends.size() != 2 || !ends[0].is_number_unsigned() || !ends[1].is_number_unsigned())
            throw FormatError("\"ends\" must be a pair of vertex ids");
        if (!color.is_number_unsigned()) throw FormatError("\"color\" must be a non-negative integer");
        out.push_back({ends[0].get<VertexId>(), ends[1].get<VertexId>(), color.get<Color>()});
    }
    return out;
}

template <typename Fn>
auto wrap(Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const ParameterError& e) {
        throw FormatError(e.what());
    } catch (const Json::exception& e) {
        throw FormatError(e.what());
    }
}

}  // namespace

Json to_json(const Hypergraph& h) {
    return Json{{"n", h.n()}, {"k", h.k()}, {"edges", tuples_to_json(h.edges())}};
}

Json to_json(const DirHypergraph& d) {
    return Json{{"n", d.n()}, {"k", d.k()}, {"arcs", tuples_to_json(d.arcs())}};
}

Json to_json(const ColoredGraph& g) {
    return Json{{"n", g.n()}, {"c", g.c()}, {"edges", colored_to_json(g.edges())}};
}

Json to_json(const ColoredDigraph& g) {
    return Json{{"n", g.n()}, {"c", g.c()}, {"arcs", colored_to_json(g.arcs())}};
}

Json to_json(const LooseCycle& w) { return Json{{"edgeSeq", tuples_to_json(w.edgeSeq)}}; }

Json to_json(const DirLooseCycle& w) { return Json{{"arcSeq", tuples_to_json(w.arcSeq)}}; }

Json to_json(const RainbowCycle& w) { return Json{{"vertexSeq", w.vertexSeq}, {"colorSeq", w.colorSeq}}; }

Hypergraph hypergraph_from_json(const Json& j) {
    return wrap([&] { return Hypergraph(require_int(j, "n"), require_int(j, "k"), tuples_from_json(require(j, "edges"))); });
}

DirHypergraph dir_hypergraph_from_json(const Json& j) {
    return wrap([&] { return DirHypergraph(require_int(j, "n"), require_int(j, "k"), tuples_from_json(require(j, "arcs"))); });
}

ColoredGraph colored_graph_from_json(const Json& j) {
    return wrap([&] { return ColoredGraph(require_int(j, "n"), require_int(j, "c"), colored_from_json(require(j, "edges"))); });
}

ColoredDigraph colored_digraph_from_json(const Json& j) {
    return wrap([&] { return ColoredDigraph(require_int(j, "n"), require_int(j, "c"), colored_from_json(require(j, "arcs"))); });
}

LooseCycle loose_cycle_from_json(const Json& j) {
    return wrap([&] { return LooseCycle{tuples_from_json(require(j, "edgeSeq"))}; });
}

DirLooseCycle dir_loose_cycle_from_json(const Json& j) {
    return wrap([&] { return DirLooseCycle{tuples_from_json(require(j, "arcSeq"))}; });
}

RainbowCycle rainbow_cycle_from_json(const Json& j) {
    return wrap([&] {
        RainbowCycle w;
        w.vertexSeq = require(j, "vertexSeq").get<std::vector<VertexId>>();
        w.colorSeq = require(j, "colorSeq").get<std::vector<Color>>();
        return w;
    });
}

StructureKind detect_kind(const Json& j) {
    if (!j.is_object()) throw FormatError("structure must be a JSON object");
    const bool colored = j.contains("c");
    if (j.contains("arcs")) return colored ? StructureKind::ColoredDigraph : StructureKind::DirHypergraph;
    if (j.contains("edges")) return colored ? StructureKind::ColoredGraph : StructureKind::Hypergraph;
    throw FormatError("structure has neither \"edges\" nor \"arcs\"");
}

}  // namespace hamlab
