#pragma once

// Text formats for graphs.
//
//   edge list:  first line "n m", then m lines "u v" (0-based)
//   JSON:       {"n": int, "edges": [[u, v], ...]}

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "cograph/graph.hpp"

namespace cograph {

Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Accepts either format; JSON is recognised by a leading '{'.
Graph parse_graph(const std::string& text);

}  // namespace cograph
