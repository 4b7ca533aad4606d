#pragma once

#include "irreg/graph.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace irreg {

Graph path(int n);      // n >= 1
Graph cycle(int n);     // n >= 3
Graph star(int n);      // K_{1,n-1}, n >= 1
Graph complete(int n);  // n >= 1
Graph empty_graph(int n);

/// Hub 0 joined to the cycle 1..n-1; n >= 5 vertices in total.
Graph wheel(int n);

/// Clique on vertices 0..k-1, independent set k..n-1, all clique-independent
/// pairs joined. 1 <= k <= n-1.
Graph complete_split(int n, int k);

Graph complete_multipartite(std::span<const int> part_sizes);

/// Friendship graph F_k: k triangles sharing vertex 0 (n = 2k + 1).
Graph friendship(int k);

/// "diamond", "trigonal_prism", "grotzsch".
Graph named(std::string_view name);
const std::vector<std::string>& named_graphs();

/// Replaces each listed edge uv by a path u-w-v through a fresh vertex w.
/// Fresh vertices are numbered n, n+1, ... in list order.
Graph subdivide_edges(const Graph& g, std::span<const Edge> edges);

/// Subdivides `count` times, each time splitting the lexicographically
/// smallest edge of the current graph.
Graph degree2_inflate(const Graph& h, int count);

}  // namespace irreg
