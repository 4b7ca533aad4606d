#pragma once

#include "irreg/graph.hpp"

#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace irreg {

/// Largest order accepted by the canonical labeling routines.
inline constexpr int kCanonicalMaxOrder = 16;

/// Identifies an isomorphism class among graphs of a fixed order.
///
/// The bytes are the graph6 encoding of the canonically relabeled graph, so a
/// code is also a valid graph6 line for a class representative.
struct CanonicalCode {
  std::string bytes;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Permutation `perm` with perm[v] = canonical position of vertex v.
std::vector<int> canonical_labeling(const Graph& g);
Graph canonical_form(const Graph& g);
CanonicalCode canonical_code(const Graph& g);

}  // namespace irreg

template <>
struct std::hash<irreg::CanonicalCode> {
  std::size_t operator()(const irreg::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.bytes);
  }
};
