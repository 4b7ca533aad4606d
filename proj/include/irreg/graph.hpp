#pragma once

#include "irreg/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace irreg {

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one bit row per vertex, so the adjacency test and
/// degree queries are O(1) and O(n/64). Graphs of a few thousand vertices are
/// fine; the combinatorial machinery (canonical forms, enumeration) has much
/// smaller caps of its own.
class Graph {
 public:
  Graph() = default;

  int order() const { return n_; }
  int size() const { return m_; }

  bool adjacent(int u, int v) const {
    return (bits_[row_offset(u) + (v >> 6)] >> (v & 63)) & 1u;
  }
  int degree(int v) const { return degrees_[v]; }
  const std::vector<int>& degrees() const { return degrees_; }

  std::vector<int> neighbors(int v) const;
  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Raw bit row of `v` (words_per_row() words, bit j of the row = adjacency to j).
  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + row_offset(v), static_cast<std::size_t>(words_)};
  }
  int words_per_row() const { return words_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  std::size_t row_offset(int v) const { return static_cast<std::size_t>(v) * words_; }

  int n_ = 0;
  int m_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<int> degrees_;
};

/// Mutable edge accumulator producing a Graph. Duplicate edges collapse.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  int order() const { return n_; }
  /// Throws InputError on self-loops or out-of-range endpoints.
  GraphBuilder& add_edge(int u, int v);
  GraphBuilder& remove_edge(int u, int v);
  bool has_edge(int u, int v) const;
  Graph build() const;

 private:
  void check_vertex(int v) const;

  int n_;
  int words_;
  std::vector<std::uint64_t> bits_;
};

/// Builds a graph from 0-based vertex pairs; duplicates collapse.
Graph from_edge_list(int n, std::span<const Edge> edges);
Graph from_edge_list(int n, std::initializer_list<Edge> edges);

Graph complement(const Graph& g);
/// Relabels vertex v to perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

struct DegreeStats {
  std::vector<int> degrees;
  std::map<int, int> histogram;  // degree -> N_i
  int max_degree = 0;
  int min_degree = 0;
  int edge_count = 0;
  Rational average_degree;
  std::vector<int> degree_set;  // ascending
  int universal_count = 0;

  int count(int degree) const {
    auto it = histogram.find(degree);
    return it == histogram.end() ? 0 : it->second;
  }
};

DegreeStats degree_stats(const Graph& g);

bool is_connected(const Graph& g);

/// m - n + 1; throws PreconditionError for disconnected graphs.
int cyclomatic_number(const Graph& g);

struct Classification {
  bool is_connected = false;
  bool is_regular = false;
  int degree_class = 0;  // |Ds(G)|
  bool is_bidegreed = false;
  bool is_balanced_bidegreed = false;
  bool is_dominating = false;
  bool is_tree = false;
  bool is_unicyclic = false;
  std::optional<int> cyclomatic;
  std::optional<int> complete_split_k;
};

Classification classify(const Graph& g);
Classification classify(const Graph& g, const DegreeStats& stats);

}  // namespace irreg
