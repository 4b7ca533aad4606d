#pragma once

#include "irreg/graph.hpp"
#include "irreg/rational.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace testing {

using irreg::Graph;
using irreg::Rational;

// Straight from the definitions, with rational arithmetic at every step.
struct NaiveMeasures {
  Rational m1, s, var, ird, irr;
};

inline NaiveMeasures naive_measures(const std::vector<int>& d) {
  NaiveMeasures out;
  const int n = static_cast<int>(d.size());
  Rational sum = 0;
  for (int x : d) sum += x;
  const Rational avg = sum / n;
  for (int x : d) {
    Rational dev = Rational(x) - avg;
    out.m1 += x * x;
    out.s += dev < 0 ? Rational(-dev) : dev;
    out.var += dev * dev;
  }
  out.var /= n;
  const int hi = *std::max_element(d.begin(), d.end());
  const int lo = *std::min_element(d.begin(), d.end());
  const auto n_hi = std::count(d.begin(), d.end(), hi);
  const auto n_lo = std::count(d.begin(), d.end(), lo);
  out.irr = Rational(n * (hi - lo), 2);
  out.ird = hi == lo ? Rational(0) : Rational(2 * n_hi * n_lo * (hi - lo), n_hi + n_lo);
  return out;
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  irreg::GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Random labeled tree from a uniformly drawn Pruefer sequence.
inline Graph random_tree(std::mt19937& rng, int n) {
  irreg::GraphBuilder b(n);
  if (n == 2) b.add_edge(0, 1);
  if (n <= 2) return b.build();
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2), deg(n, 1);
  for (int& x : seq) {
    x = pick(rng);
    ++deg[x];
  }
  for (int x : seq) {
    int leaf = 0;
    while (deg[leaf] != 1) ++leaf;
    b.add_edge(leaf, x);
    --deg[leaf];
    --deg[x];
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (deg[v] == 1) {
      if (u < 0) {
        u = v;
      } else {
        b.add_edge(u, v);
      }
    }
  }
  return b.build();
}

inline std::vector<int> sorted_desc(std::vector<int> d) {
  std::sort(d.rbegin(), d.rend());
  return d;
}

}  // namespace testing
