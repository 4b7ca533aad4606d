#pragma once

#include "irreg/canonical.hpp"
#include "irreg/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace irreg {

enum class PopulationKind { all, trees, unicyclic };

std::string to_string(PopulationKind k);

inline constexpr int kMaxOrderAll = 8;
inline constexpr int kMaxOrderTrees = 12;
inline constexpr int kMaxOrderUnicyclic = 10;

int max_order(PopulationKind k);

/// One slice of graphs on exactly n vertices, counted up to isomorphism.
struct EnumerationSpec {
  int n = 1;
  std::optional<int> m;
  bool connected_only = false;
  bool irregular_only = false;
  PopulationKind population = PopulationKind::all;

  /// Stable textual key, e.g. "all-n6-m12-connected-irregular".
  std::string key() const;
};

/// A class representative in canonical labeling together with its code.
struct ClassRep {
  CanonicalCode code;
  Graph graph;
};

/// One representative per isomorphism class satisfying the filters, sorted by
/// canonical code. Throws CapabilityError beyond the caps and InputError for
/// malformed specs. The result does not depend on `workers`.
std::vector<ClassRep> enumerate(const EnumerationSpec& spec, int workers = 1);

std::vector<ClassRep> enumerate_trees(int n, int workers = 1);
std::vector<ClassRep> enumerate_unicyclic(int n, int workers = 1);

/// Drops the per-process memo of class lists built by enumerate().
void clear_enumeration_cache();

/// Brute force over labeled edge subsets of K_n (n <= 7). Independent of the
/// vertex-extension path used by enumerate(); kept as a cross-check.
std::vector<ClassRep> enumerate_labeled(const EnumerationSpec& spec);

}  // namespace irreg
