#include "irreg/generators.hpp"

#include "irreg/errors.hpp"

#include <algorithm>

namespace irreg {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

}  // namespace

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  GraphBuilder b(n);
  for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  GraphBuilder b(n);
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

Graph star(int n) {
  require(n >= 1, "star needs n >= 1");
  GraphBuilder b(n);
  for (int v = 1; v < n; ++v) b.add_edge(0, v);
  return b.build();
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return b.build();
}

Graph empty_graph(int n) {
  require(n >= 1, "graph needs n >= 1");
  return GraphBuilder(n).build();
}

Graph wheel(int n) {
  require(n >= 5, "wheel needs n >= 5");
  GraphBuilder b(n);
  for (int v = 1; v < n; ++v) {
    b.add_edge(0, v);
    b.add_edge(v, v + 1 < n ? v + 1 : 1);
  }
  return b.build();
}

Graph complete_split(int n, int k) {
  require(n >= 2 && k >= 1 && k <= n - 1, "complete split graph needs 1 <= k <= n-1");
  GraphBuilder b(n);
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return b.build();
}

Graph complete_multipartite(std::span<const int> part_sizes) {
  require(part_sizes.size() >= 2, "complete multipartite graph needs at least two parts");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    require(part_sizes[p] >= 1, "part sizes must be positive");
    part_of.insert(part_of.end(), part_sizes[p], static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) b.add_edge(u, v);
    }
  }
  return b.build();
}

Graph friendship(int k) {
  require(k >= 1, "friendship graph needs k >= 1");
  GraphBuilder b(2 * k + 1);
  for (int t = 0; t < k; ++t) {
    b.add_edge(0, 2 * t + 1);
    b.add_edge(0, 2 * t + 2);
    b.add_edge(2 * t + 1, 2 * t + 2);
  }
  return b.build();
}

const std::vector<std::string>& named_graphs() {
  static const std::vector<std::string> names = {"diamond", "trigonal_prism", "grotzsch"};
  return names;
}

Graph named(std::string_view name) {
  if (name == "diamond") {
    return from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  }
  if (name == "trigonal_prism") {
    return from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  }
  if (name == "grotzsch") {
    // Mycielskian of C5: outer cycle 0..4, shadows 5..9 (shadow of i sees the
    // cycle neighbours of i), apex 10 sees every shadow.
    GraphBuilder b(11);
    for (int i = 0; i < 5; ++i) {
      const int next = (i + 1) % 5;
      const int prev = (i + 4) % 5;
      b.add_edge(i, next);
      b.add_edge(5 + i, next);
      b.add_edge(5 + i, prev);
      b.add_edge(10, 5 + i);
    }
    return b.build();
  }
  throw InputError("unknown named graph '" + std::string(name) + "'");
}

Graph subdivide_edges(const Graph& g, std::span<const Edge> edges) {
  const int n = g.order();
  const int extra = static_cast<int>(edges.size());
  GraphBuilder b(n + extra);
  for (const auto& e : g.edges()) b.add_edge(e.u, e.v);
  for (int k = 0; k < extra; ++k) {
    const auto& e = edges[k];
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || !g.adjacent(e.u, e.v)) {
      throw InputError("cannot subdivide missing edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    if (!b.has_edge(e.u, e.v)) throw InputError("edge listed twice for subdivision");
    b.remove_edge(e.u, e.v);
    b.add_edge(e.u, n + k);
    b.add_edge(n + k, e.v);
  }
  return b.build();
}

Graph degree2_inflate(const Graph& h, int count) {
  require(count >= 0, "inflation count must be non-negative");
  Graph g = h;
  for (int k = 0; k < count; ++k) {
    const auto edges = g.edges();
    if (edges.empty()) throw InputError("cannot subdivide an edgeless graph");
    const Edge first = edges.front();
    g = subdivide_edges(g, std::span<const Edge>(&first, 1));
  }
  return g;
}

}  // namespace irreg
