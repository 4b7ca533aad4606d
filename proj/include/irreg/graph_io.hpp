#pragma once

#include "irreg/graph.hpp"

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace irreg {

/// Standard graph6 encoding (no header, no trailing newline).
std::string to_graph6(const Graph& g);
/// Parses one graph6 line; an optional ">>graph6<<" header is accepted.
/// Throws InputError on malformed input.
Graph from_graph6(std::string_view line);

/// Edge-list text: first line "n m", then m lines "u v" (0-based).
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

/// Reads every graph in a stream. The first non-blank, non-comment line
/// decides the format: two integers means one edge list, anything else is
/// graph6 with one graph per line.
std::vector<Graph> read_graphs(std::istream& in);

}  // namespace irreg
