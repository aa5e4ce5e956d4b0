#pragma once

#include <json.hpp>

#include "hamlab/structures.hpp"

namespace hamlab {

using Json = nlohmann::json;

// Edge-list formats:
//   {"n":6,"k":3,"edges":[[0,1,2],...]}                  Hypergraph
//   {"n":6,"k":3,"arcs":[[0,1,2],...]}                   DirHypergraph (ordered)
//   {"n":5,"c":5,"edges":[{"ends":[0,1],"color":2},...]} ColoredGraph
//   {"n":5,"c":5,"arcs":[{"ends":[0,1],"color":2},...]}  ColoredDigraph (tail, head)
// Witnesses:
//   {"edgeSeq":[[...],...]}  {"arcSeq":[[...],...]}  {"vertexSeq":[...],"colorSeq":[...]}
Json to_json(const Hypergraph& h);
Json to_json(const DirHypergraph& d);
Json to_json(const ColoredGraph& g);
Json to_json(const ColoredDigraph& g);
Json to_json(const LooseCycle& w);
Json to_json(const DirLooseCycle& w);
Json to_json(const RainbowCycle& w);

// Parsers validate every structural invariant; violations raise FormatError.
Hypergraph hypergraph_from_json(const Json& j);
DirHypergraph dir_hypergraph_from_json(const Json& j);
ColoredGraph colored_graph_from_json(const Json& j);
ColoredDigraph colored_digraph_from_json(const Json& j);
LooseCycle loose_cycle_from_json(const Json& j);
DirLooseCycle dir_loose_cycle_from_json(const Json& j);
RainbowCycle rainbow_cycle_from_json(const Json& j);

enum class StructureKind { Hypergraph, DirHypergraph, ColoredGraph, ColoredDigraph };

// Infers the kind from the keys present ("arcs" vs "edges", presence of "c").
StructureKind detect_kind(const Json& j);

}  // namespace hamlab
