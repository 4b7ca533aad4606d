#include "irreg/canonical.hpp"

#include "irreg/errors.hpp"
#include "irreg/graph_io.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace irreg {

namespace {

using Row = std::uint32_t;
using Code = unsigned __int128;

/// Ordered partition of the vertex set: vertices listed cell by cell,
/// `cell_end[i]` is one past the last position of the cell starting at i.
struct Partition {
  std::array<std::int8_t, kCanonicalMaxOrder> vertex{};
  std::array<std::int8_t, kCanonicalMaxOrder> cell_end{};  // valid at cell starts
  int n = 0;
};

class Canonicalizer {
 public:
  Canonicalizer(const Graph& g) : n_(g.order()) {
    for (int v = 0; v < n_; ++v) adj_[v] = static_cast<Row>(g.row(v)[0]);
  }

  std::vector<int> run() {
    Partition p;
    p.n = n_;
    for (int i = 0; i < n_; ++i) p.vertex[i] = static_cast<std::int8_t>(i);
    if (n_ > 0) p.cell_end[0] = static_cast<std::int8_t>(n_);
    search(p);
    std::vector<int> perm(n_);
    for (int pos = 0; pos < n_; ++pos) perm[best_order_[pos]] = pos;
    return perm;
  }

 private:
  Row cell_mask(const Partition& p, int start) const {
    Row mask = 0;
    for (int i = start; i < p.cell_end[start]; ++i) mask |= Row{1} << p.vertex[i];
    return mask;
  }

  // Splits cells by neighbour counts into each splitter cell until the
  // partition is equitable. Only cell structure drives the order, so the
  // result commutes with relabeling.
  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int s = 0; s < p.n && !changed; s = p.cell_end[s]) {
        const Row splitter = cell_mask(p, s);
        for (int t = 0; t < p.n; t = p.cell_end[t]) {
          const int end = p.cell_end[t];
          if (end - t == 1) continue;
          std::array<int, kCanonicalMaxOrder> count{};
          bool uniform = true;
          for (int i = t; i < end; ++i) {
            count[i] = std::popcount(adj_[p.vertex[i]] & splitter);
            if (count[i] != count[t]) uniform = false;
          }
          if (uniform) continue;
          std::array<std::pair<int, std::int8_t>, kCanonicalMaxOrder> keyed;
          for (int i = t; i < end; ++i) keyed[i - t] = {count[i], p.vertex[i]};
          std::sort(keyed.begin(), keyed.begin() + (end - t));
          for (int i = t; i < end; ++i) p.vertex[i] = keyed[i - t].second;
          int start = t;
          for (int i = t + 1; i <= end; ++i) {
            if (i == end || keyed[i - t].first != keyed[i - 1 - t].first) {
              p.cell_end[start] = static_cast<std::int8_t>(i);
              start = i;
            }
          }
          changed = true;
          break;
        }
      }
    }
  }

  bool twins(int u, int v) const {
    const Row mu = adj_[u] & ~(Row{1} << v);
    const Row mv = adj_[v] & ~(Row{1} << u);
    return mu == mv;
  }

  Code leaf_code(const Partition& p) const {
    Code code = 0;
    for (int j = 1; j < n_; ++j) {
      const Row rj = adj_[p.vertex[j]];
      for (int i = 0; i < j; ++i) code = (code << 1) | ((rj >> p.vertex[i]) & 1u);
    }
    return code;
  }

  void search(Partition p) {
    refine(p);
    int target = -1;
    for (int c = 0; c < p.n; c = p.cell_end[c]) {
      if (p.cell_end[c] - c > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      const Code code = leaf_code(p);
      if (!have_best_ || code > best_code_) {
        have_best_ = true;
        best_code_ = code;
        for (int i = 0; i < n_; ++i) best_order_[i] = p.vertex[i];
      }
      return;
    }
    const int end = p.cell_end[target];
    std::array<int, kCanonicalMaxOrder> tried{};
    int n_tried = 0;
    for (int i = target; i < end; ++i) {
      const int v = p.vertex[i];
      // Swapping twins is an automorphism fixing the current partition, so
      // their subtrees yield identical leaves.
      bool redundant = false;
      for (int k = 0; k < n_tried && !redundant; ++k) redundant = twins(tried[k], v);
      if (redundant) continue;
      tried[n_tried++] = v;

      Partition child = p;
      std::swap(child.vertex[target], child.vertex[i]);
      child.cell_end[target] = static_cast<std::int8_t>(target + 1);
      child.cell_end[target + 1] = static_cast<std::int8_t>(end);
      search(child);
    }
  }

  int n_;
  std::array<Row, kCanonicalMaxOrder> adj_{};
  bool have_best_ = false;
  Code best_code_ = 0;
  std::array<int, kCanonicalMaxOrder> best_order_{};
};

void check_cap(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    throw CapabilityError("canonical forms are limited to n <= " + std::to_string(kCanonicalMaxOrder) +
                          " (got n=" + std::to_string(g.order()) + ")");
  }
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  check_cap(g);
  return Canonicalizer(g).run();
}

Graph canonical_form(const Graph& g) { return relabel(g, canonical_labeling(g)); }

CanonicalCode canonical_code(const Graph& g) { return {to_graph6(canonical_form(g))}; }

}  // namespace irreg
