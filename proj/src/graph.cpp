#include "irreg/graph.hpp"

#include "irreg/errors.hpp"

#include <algorithm>
#include <bit>

namespace irreg {

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  out.reserve(degrees_[v]);
  auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t word = r[w];
    while (word) {
      out.push_back(w * 64 + std::countr_zero(word));
      word &= word - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

GraphBuilder::GraphBuilder(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw InputError("negative vertex count");
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void GraphBuilder::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw InputError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
  }
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
  return *this;
}

bool GraphBuilder::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
}

Graph GraphBuilder::build() const {
  Graph g;
  g.n_ = n_;
  g.words_ = words_;
  g.bits_ = bits_;
  g.degrees_.assign(n_, 0);
  long long total = 0;
  for (int v = 0; v < n_; ++v) {
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(bits_[static_cast<std::size_t>(v) * words_ + w]);
    g.degrees_[v] = d;
    total += d;
  }
  g.m_ = static_cast<int>(total / 2);
  return g;
}

Graph from_edge_list(int n, std::span<const Edge> edges) {
  if (n < 1) throw InputError("graph needs at least one vertex");
  GraphBuilder b(n);
  for (const auto& e : edges) b.add_edge(e.u, e.v);
  return b.build();
}

Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
  return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph complement(const Graph& g) {
  const int n = g.order();
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) b.add_edge(u, v);
    }
  }
  return b.build();
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw InputError("permutation size mismatch");
  std::vector<char> seen(g.order(), 0);
  for (int p : perm) {
    if (p < 0 || p >= g.order() || seen[p]) throw InputError("not a permutation");
    seen[p] = 1;
  }
  GraphBuilder b(g.order());
  for (const auto& e : g.edges()) b.add_edge(perm[e.u], perm[e.v]);
  return b.build();
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  const int n = g.order();
  s.degrees = g.degrees();
  for (int d : s.degrees) ++s.histogram[d];
  s.edge_count = g.size();
  if (n > 0) {
    s.min_degree = s.histogram.begin()->first;
    s.max_degree = s.histogram.rbegin()->first;
    s.average_degree = make_rational(2LL * g.size(), n);
  }
  for (const auto& [deg, cnt] : s.histogram) s.degree_set.push_back(deg);
  s.universal_count = s.count(n - 1);
  return s;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  const int words = g.words_per_row();
  std::vector<std::uint64_t> seen(words, 0), frontier(words, 0);
  seen[0] = frontier[0] = 1;
  int reached = 1;
  while (true) {
    std::vector<std::uint64_t> next(words, 0);
    for (int w = 0; w < words; ++w) {
      std::uint64_t word = frontier[w];
      while (word) {
        const int v = w * 64 + std::countr_zero(word);
        word &= word - 1;
        auto r = g.row(v);
        for (int k = 0; k < words; ++k) next[k] |= r[k];
      }
    }
    int added = 0;
    for (int w = 0; w < words; ++w) {
      next[w] &= ~seen[w];
      seen[w] |= next[w];
      added += std::popcount(next[w]);
    }
    if (added == 0) break;
    reached += added;
    frontier.swap(next);
  }
  return reached == n;
}

int cyclomatic_number(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("cyclomatic number requires a connected graph");
  return g.size() - g.order() + 1;
}

namespace {

std::optional<int> complete_split_parameter(const Graph& g, const DegreeStats& s) {
  const int n = g.order();
  if (n < 2) return std::nullopt;
  const int q = s.universal_count;
  if (q == n) return n - 1;  // K_n = CS(n, n-1)
  if (q == 0) return std::nullopt;
  // Every non-universal vertex must see exactly the q universal vertices.
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != n - 1 && g.degree(v) != q) return std::nullopt;
  }
  return q;
}

}  // namespace

Classification classify(const Graph& g, const DegreeStats& s) {
  Classification c;
  const int n = g.order();
  c.is_connected = is_connected(g);
  c.degree_class = static_cast<int>(s.degree_set.size());
  c.is_regular = c.degree_class <= 1;
  c.is_bidegreed = c.degree_class == 2;
  if (c.is_bidegreed && n % 2 == 0) {
    c.is_balanced_bidegreed = s.count(s.max_degree) == n / 2 && s.count(s.min_degree) == n / 2;
  }
  c.is_dominating = c.is_connected && !c.is_regular && s.universal_count >= 1;
  if (c.is_connected) {
    c.cyclomatic = g.size() - n + 1;
    c.is_tree = *c.cyclomatic == 0;
    c.is_unicyclic = *c.cyclomatic == 1;
  }
  c.complete_split_k = complete_split_parameter(g, s);
  return c;
}

Classification classify(const Graph& g) { return classify(g, degree_stats(g)); }

}  // namespace irreg
