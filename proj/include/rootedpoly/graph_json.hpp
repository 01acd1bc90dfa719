#pragma once

// JSON interchange for graphs and dendrimer specs. Vertices are 1-based in
// JSON. Weights are strings "n" or "n/d" (plain integers are accepted too).
//
//   {"p": 3,
//    "arcs":  [{"from": 1, "to": 2, "w": "1/2"}],
//    "edges": [{"a": 2, "b": 3, "w": "1"}],
//    "loops": [{"at": 1, "b": "-1"}],
//    "root": 1,
//    "parts": [1, 2, 1]}

#include "rootedpoly/graph.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace rootedpoly {

Graph graph_from_json(const nlohmann::json& j);
/// Parses text; messages carry the line/column of syntax errors and the
/// offending field for schema errors.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);

/// Symmetric arc pairs are written as "edges", the rest as "arcs".
nlohmann::json graph_to_json(const Graph& g);
/// Adds a "provenance" array: one entry per vertex with the copy index (the
/// core vertex the copy hangs from, 1-based, or null) and the original index.
nlohmann::json product_to_json(const Product<Rational>& prod);

/// {"core": graph, "unit": rooted graph, "attach_sites": [...], "generations": g}
DendrimerSpec dendrimer_from_json(const nlohmann::json& j);
DendrimerSpec load_dendrimer(const std::string& path);
nlohmann::json dendrimer_to_json(const DendrimerSpec& spec);

nlohmann::json read_json_file(const std::string& path);

}  // namespace rootedpoly
