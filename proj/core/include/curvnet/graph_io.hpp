#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "curvnet/graph.hpp"

namespace curvnet {

// CSV edge lists: UTF-8, header row `source,target[,weight][,directed]`.
// Unweighted rows default to weight 1; a `directed` cell of 1/true orients
// the row source -> target. Errors carry the 1-based line number.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

// Optional companion table, header `vertex,weight`; every vertex must
// already exist in the graph the rows are applied to.
//
// The two-stream overload parses edges first, then applies vertex weights.
Graph parse_edge_list(std::string_view edge_csv, std::string_view vertex_weight_csv);

// JSON graph documents:
//   {"vertices":[...],
//    "edges":[{"u":"a","v":"b","w":1.0,"dir":true}, ...],
//    "vertex_weights":{"a":2.0, ...}}
// "w" defaults to 1, "dir" to false; "vertex_weights" may be absent.
Graph parse_json_graph(std::string_view text);
Graph parse_json_graph(std::istream& in);

// Canonical serializations: vertices sorted, edges sorted by canonical
// endpoint pair, keys sorted. Re-parsing yields an identical graph and the
// bytes are stable across runs, so both formats are usable for golden tests.
std::string to_csv(const Graph& g);
std::string vertex_weights_to_csv(const Graph& g);
std::string to_json(const Graph& g);

// Reads a graph file, dispatching on extension (".json" vs anything else,
// which is treated as CSV).
Graph load_graph_file(const std::string& path,
                      const std::string& vertex_weight_path = "");

} // namespace curvnet
