#include "helpers.hpp"

#include "irreg/canonical.hpp"
#include "irreg/generators.hpp"
#include "irreg/graph_io.hpp"
#include "irreg/measures.hpp"
#include "irreg/spectral.hpp"

#include <doctest.h>

using namespace irreg;

namespace {

constexpr int kTrials = 300;

struct Sample {
  std::mt19937 rng;
  explicit Sample(unsigned seed) : rng(seed) {}
  Graph next() {
    std::uniform_int_distribution<int> order(1, 14);
    std::uniform_real_distribution<double> density(0.05, 0.95);
    return testing::random_graph(rng, order(rng), density(rng));
  }
};

}  // namespace

TEST_CASE("measures match the definitional oracle") {
  Sample s(101);
  for (int t = 0; t < kTrials; ++t) {
    const Graph g = s.next();
    const auto ms = measure_set(g);
    const auto naive = testing::naive_measures(g.degrees());
    CHECK(ms.m1 == naive.m1);
    CHECK(ms.s == naive.s);
    CHECK(ms.var == naive.var);
    CHECK(ms.ird == naive.ird);
    CHECK(ms.irr == naive.irr);
    CHECK(ms.omega.has_value() == (naive.s > 0));
  }
}

TEST_CASE("everything is invariant under relabeling") {
  Sample s(202);
  for (int t = 0; t < kTrials; ++t) {
    const Graph g = s.next();
    const Graph h = relabel(g, testing::random_permutation(s.rng, g.order()));
    const auto a = measure_set(g), b = measure_set(h);
    CHECK(a.s == b.s);
    CHECK(a.var == b.var);
    CHECK(a.ird == b.ird);
    CHECK(canonical_code(g) == canonical_code(h));
    const auto ra = bound_report(g), rb = bound_report(h);
    REQUIRE(ra.size() == rb.size());
    for (std::size_t i = 0; i < ra.size(); ++i) {
      CHECK(ra[i].lhs == rb[i].lhs);
      CHECK(ra[i].rhs == rb[i].rhs);
      CHECK(ra[i].applicable == rb[i].applicable);
    }
  }
}

TEST_CASE("variance from the first Zagreb index") {
  Sample s(303);
  for (int t = 0; t < kTrials; ++t) {
    const Graph g = s.next();
    const long long n = g.order(), m = g.size();
    const auto ms = measure_set(g);
    CHECK(ms.var * n * n == ms.m1 * n - 4 * m * m);
  }
}

TEST_CASE("variance is less than half the deviation for irregular graphs") {
  Sample s(404);
  for (int t = 0; t < kTrials; ++t) {
    const Graph g = s.next();
    const auto ms = measure_set(g);
    if (ms.s == 0) continue;
    CHECK(2 * ms.var < ms.s);
    CHECK(*ms.omega < make_rational(1, 2));
  }
}

TEST_CASE("no bound in the report fails on random graphs") {
  Sample s(505);
  for (int t = 0; t < kTrials; ++t) {
    const Graph g = s.next();
    for (const auto& r : bound_report(g)) {
      INFO(r.bound_id << " on " << to_graph6(g));
      CHECK_FALSE(r.violated());
      if (r.bound_id != "T2i") CHECK_FALSE(r.equality_mismatch());
    }
  }
}

TEST_CASE("random trees satisfy the tree formulas") {
  std::mt19937 rng(606);
  for (int t = 0; t < kTrials; ++t) {
    const int n = 2 + t % 40;
    const Graph tree = testing::random_tree(rng, n);
    REQUIRE(classify(tree).is_tree);
    const auto tf = tree_formulas(tree);
    const auto ms = measure_set(tree);
    CHECK(tf.s_closed == ms.s);
    CHECK(tf.var_closed == ms.var);
    CHECK(tf.irr_closed == ms.irr);
    CHECK(tf.n1_based_s == ms.s);
    CHECK(ms.ird <= tf.ird_upper);
    CHECK(ms.ird >= tf.ird_lower);
  }
}

TEST_CASE("complete split closed forms") {
  for (int n = 2; n <= 200; ++n) {
    for (int k = 1; k < n; ++k) {
      const auto ms = measure_set(complete_split(n, k));
      const long long a = n - k, b = n - 1 - k;
      CHECK(ms.s == make_rational(2LL * k * a * b, n));
      CHECK(ms.var == make_rational(1LL * k * a * b * b, 1LL * n * n));
      if (b > 0) CHECK(*ms.omega == make_rational(b, 2LL * n));
    }
  }
}

TEST_CASE("graph6 round trip on random graphs") {
  Sample s(707);
  for (int t = 0; t < kTrials; ++t) {
    const Graph g = s.next();
    CHECK(from_graph6(to_graph6(g)) == g);
    CHECK(parse_edge_list(to_edge_list(g)) == g);
  }
}

TEST_CASE("complement of a complement is the identity") {
  Sample s(808);
  for (int t = 0; t < 100; ++t) {
    const Graph g = s.next();
    CHECK(complement(complement(g)) == g);
    CHECK(complement(g).size() + g.size() == g.order() * (g.order() - 1) / 2);
  }
}
