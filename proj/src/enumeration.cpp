#include "irreg/enumeration.hpp"

#include "irreg/errors.hpp"
#include "irreg/graph_io.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace irreg {

std::string to_string(PopulationKind k) {
  switch (k) {
    case PopulationKind::all: return "all";
    case PopulationKind::trees: return "trees";
    case PopulationKind::unicyclic: return "unicyclic";
  }
  return "?";
}

int max_order(PopulationKind k) {
  switch (k) {
    case PopulationKind::all: return kMaxOrderAll;
    case PopulationKind::trees: return kMaxOrderTrees;
    case PopulationKind::unicyclic: return kMaxOrderUnicyclic;
  }
  return 0;
}

std::string EnumerationSpec::key() const {
  std::string k = to_string(population) + "-n" + std::to_string(n);
  if (m) k += "-m" + std::to_string(*m);
  if (connected_only) k += "-connected";
  if (irregular_only) k += "-irregular";
  return k;
}

namespace {

using ClassList = std::vector<ClassRep>;
using ClassListPtr = std::shared_ptr<const ClassList>;

void check_spec(const EnumerationSpec& spec) {
  const int min_n = spec.population == PopulationKind::unicyclic ? 3 : 1;
  if (spec.n < min_n) {
    throw InputError(to_string(spec.population) + " enumeration needs n >= " + std::to_string(min_n));
  }
  if (spec.n > max_order(spec.population)) {
    throw CapabilityError(to_string(spec.population) + " enumeration is capped at n <= " +
                          std::to_string(max_order(spec.population)) + " (got n=" + std::to_string(spec.n) + ")");
  }
  if (spec.m && (*spec.m < 0 || *spec.m > spec.n * (spec.n - 1) / 2)) {
    throw InputError("edge count " + std::to_string(*spec.m) + " impossible for n=" + std::to_string(spec.n));
  }
}

/// Canonicalizes every candidate produced by `expand(parent_index, emit)`,
/// splitting parents across workers, and returns the merged classes sorted by
/// code. Merging through a sorted map makes the output worker-independent.
template <typename Expand>
ClassList dedup_parallel(std::size_t parents, int workers, Expand expand) {
  workers = std::max(1, std::min<int>(workers, static_cast<int>(std::max<std::size_t>(parents, 1))));
  std::vector<std::unordered_map<CanonicalCode, Graph>> local(workers);
  auto work = [&](int w) {
    for (std::size_t p = w; p < parents; p += workers) {
      expand(p, [&](const Graph& candidate) {
        Graph canon = canonical_form(candidate);
        CanonicalCode code{to_graph6(canon)};
        local[w].try_emplace(std::move(code), std::move(canon));
      });
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  std::map<CanonicalCode, Graph> merged;
  for (auto& part : local) {
    for (auto& [code, g] : part) merged.try_emplace(code, std::move(g));
  }
  ClassList out;
  out.reserve(merged.size());
  for (auto& [code, g] : merged) out.push_back({code, std::move(g)});
  return out;
}

Graph with_new_vertex(const Graph& parent, std::uint32_t neighbours) {
  const int n = parent.order();
  GraphBuilder b(n + 1);
  for (const auto& e : parent.edges()) b.add_edge(e.u, e.v);
  for (int v = 0; v < n; ++v) {
    if ((neighbours >> v) & 1u) b.add_edge(v, n);
  }
  return b.build();
}

/// Memoized class lists per (kind, n); computed once per process.
class ClassCache {
 public:
  static ClassCache& instance() {
    static ClassCache cache;
    return cache;
  }

  ClassListPtr get(PopulationKind kind, int n, int workers) {
    {
      std::lock_guard lock(mutex_);
      auto it = lists_.find({kind, n});
      if (it != lists_.end()) return it->second;
    }
    auto built = std::make_shared<const ClassList>(build(kind, n, workers));
    std::lock_guard lock(mutex_);
    return lists_.try_emplace({kind, n}, std::move(built)).first->second;
  }

  void clear() {
    std::lock_guard lock(mutex_);
    lists_.clear();
  }

 private:
  ClassList build(PopulationKind kind, int n, int workers) {
    switch (kind) {
      case PopulationKind::all: return build_all(n, workers);
      case PopulationKind::trees: return build_trees(n, workers);
      case PopulationKind::unicyclic: return build_unicyclic(n, workers);
    }
    return {};
  }

  // Deleting the last vertex of any n-vertex graph leaves a graph isomorphic
  // to some (n-1)-class representative, so extending every representative by
  // every neighbourhood reaches every class.
  ClassList build_all(int n, int workers) {
    if (n == 1) return dedup_parallel(1, 1, [](std::size_t, auto emit) { emit(GraphBuilder(1).build()); });
    auto parents = get(PopulationKind::all, n - 1, workers);
    return dedup_parallel(parents->size(), workers, [&](std::size_t p, auto emit) {
      const Graph& parent = (*parents)[p].graph;
      for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) emit(with_new_vertex(parent, mask));
    });
  }

  // Every tree with n >= 2 vertices has a leaf whose removal leaves a tree.
  ClassList build_trees(int n, int workers) {
    if (n == 1) return dedup_parallel(1, 1, [](std::size_t, auto emit) { emit(GraphBuilder(1).build()); });
    auto parents = get(PopulationKind::trees, n - 1, workers);
    return dedup_parallel(parents->size(), workers, [&](std::size_t p, auto emit) {
      const Graph& parent = (*parents)[p].graph;
      for (int v = 0; v < n - 1; ++v) emit(with_new_vertex(parent, 1u << v));
    });
  }

  // A connected graph with m = n is a spanning tree plus one extra edge.
  ClassList build_unicyclic(int n, int workers) {
    auto trees = get(PopulationKind::trees, n, workers);
    return dedup_parallel(trees->size(), workers, [&](std::size_t p, auto emit) {
      const Graph& tree = (*trees)[p].graph;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (tree.adjacent(u, v)) continue;
          GraphBuilder b(n);
          for (const auto& e : tree.edges()) b.add_edge(e.u, e.v);
          b.add_edge(u, v);
          emit(b.build());
        }
      }
    });
  }

  std::mutex mutex_;
  std::map<std::pair<PopulationKind, int>, ClassListPtr> lists_;
};

bool passes(const EnumerationSpec& spec, const Graph& g) {
  if (spec.m && g.size() != *spec.m) return false;
  if (spec.irregular_only) {
    const auto& d = g.degrees();
    if (std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) == d.end()) return false;
  }
  if (spec.connected_only && !is_connected(g)) return false;
  return true;
}

}  // namespace

std::vector<ClassRep> enumerate(const EnumerationSpec& spec, int workers) {
  check_spec(spec);
  auto classes = ClassCache::instance().get(spec.population, spec.n, workers);
  std::vector<ClassRep> out;
  for (const auto& rep : *classes) {
    if (passes(spec, rep.graph)) out.push_back(rep);
  }
  return out;
}

void clear_enumeration_cache() { ClassCache::instance().clear(); }

std::vector<ClassRep> enumerate_trees(int n, int workers) {
  EnumerationSpec spec;
  spec.n = n;
  spec.population = PopulationKind::trees;
  return enumerate(spec, workers);
}

std::vector<ClassRep> enumerate_unicyclic(int n, int workers) {
  EnumerationSpec spec;
  spec.n = n;
  spec.population = PopulationKind::unicyclic;
  return enumerate(spec, workers);
}

std::vector<ClassRep> enumerate_labeled(const EnumerationSpec& spec) {
  check_spec(spec);
  if (spec.population != PopulationKind::all) throw InputError("labeled enumeration covers the 'all' population");
  if (spec.n > 7) throw CapabilityError("labeled enumeration is capped at n <= 7");
  const int n = spec.n;
  std::vector<Edge> slots;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) slots.push_back({u, v});
  }
  const int total = static_cast<int>(slots.size());
  std::unordered_map<CanonicalCode, Graph> seen;
  auto visit = [&](std::uint32_t mask) {
    GraphBuilder b(n);
    for (int s = 0; s < total; ++s) {
      if ((mask >> s) & 1u) b.add_edge(slots[s].u, slots[s].v);
    }
    Graph g = b.build();
    if (!passes(spec, g)) return;
    Graph canon = canonical_form(g);
    seen.try_emplace(CanonicalCode{to_graph6(canon)}, std::move(canon));
  };
  if (spec.m) {
    // Gosper's hack over all masks with exactly m bits.
    const int m = *spec.m;
    if (m == 0) {
      visit(0);
    } else {
      std::uint32_t mask = (1u << m) - 1;
      const std::uint32_t limit = 1u << total;
      while (mask < limit) {
        visit(mask);
        const std::uint32_t c = mask & -mask;
        const std::uint32_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
      }
    }
  } else {
    for (std::uint32_t mask = 0; mask < (1u << total); ++mask) visit(mask);
  }
  std::map<CanonicalCode, Graph> sorted(seen.begin(), seen.end());
  std::vector<ClassRep> out;
  for (auto& [code, g] : sorted) out.push_back({code, std::move(g)});
  return out;
}

}  // namespace irreg
