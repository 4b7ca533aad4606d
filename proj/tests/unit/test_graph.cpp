#include "helpers.hpp"

#include "irreg/errors.hpp"
#include "irreg/generators.hpp"
#include "irreg/graph.hpp"

#include <doctest.h>

using namespace irreg;

TEST_CASE("edge list construction") {
  SUBCASE("path") {
    const Graph g = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.degrees() == std::vector<int>{1, 2, 2, 1});
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
  }
  SUBCASE("star") {
    const Graph g = from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(g.degrees() == std::vector<int>{3, 1, 1, 1});
    CHECK(g.neighbors(0) == std::vector<int>{1, 2, 3});
  }
  SUBCASE("diamond") {
    const Graph g = from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(testing::sorted_desc(g.degrees()) == std::vector<int>{3, 3, 2, 2});
  }
  SUBCASE("duplicates collapse, order normalized") {
    const Graph g = from_edge_list(3, {{1, 0}, {0, 1}, {2, 1}});
    CHECK(g.size() == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  }
  SUBCASE("edgeless") {
    const Graph g = from_edge_list(1, {});
    CHECK(g.order() == 1);
    CHECK(g.size() == 0);
  }
}

TEST_CASE("malformed edge lists") {
  CHECK_THROWS_AS(from_edge_list(3, {{0, 0}}), InputError);
  CHECK_THROWS_AS(from_edge_list(3, {{0, 3}}), InputError);
  CHECK_THROWS_AS(from_edge_list(3, {{-1, 2}}), InputError);
  CHECK_THROWS_AS(from_edge_list(0, {}), InputError);
}

TEST_CASE("builder add and remove") {
  GraphBuilder b(5);
  b.add_edge(0, 1).add_edge(1, 2).add_edge(3, 4);
  CHECK(b.has_edge(2, 1));
  b.remove_edge(1, 2);
  CHECK_FALSE(b.has_edge(1, 2));
  const Graph g = b.build();
  CHECK(g.size() == 2);
  CHECK(g.degree(2) == 0);
}

TEST_CASE("large graphs use several words per row") {
  const Graph g = path(1000);
  CHECK(g.words_per_row() == 16);
  CHECK(g.size() == 999);
  CHECK(g.adjacent(998, 999));
  CHECK(g.adjacent(63, 64));
  CHECK(is_connected(g));
}

TEST_CASE("degree statistics") {
  SUBCASE("complete tripartite K_{2,3,5}") {
    const auto st = degree_stats(complete_multipartite(std::vector<int>{2, 3, 5}));
    CHECK(st.edge_count == 31);
    CHECK(st.histogram == std::map<int, int>{{5, 5}, {7, 3}, {8, 2}});
    CHECK(st.max_degree == 8);
    CHECK(st.min_degree == 5);
    CHECK(st.average_degree == make_rational(31, 5));
    CHECK(st.degree_set == std::vector<int>{5, 7, 8});
    CHECK(st.universal_count == 0);
  }
  SUBCASE("C_5") {
    const auto st = degree_stats(cycle(5));
    CHECK(st.max_degree == 2);
    CHECK(st.min_degree == 2);
    CHECK(st.degree_set == std::vector<int>{2});
  }
  SUBCASE("Groetzsch") {
    const auto st = degree_stats(named("grotzsch"));
    CHECK(st.degrees.size() == 11);
    CHECK(st.edge_count == 20);
    CHECK(st.histogram == std::map<int, int>{{3, 5}, {4, 5}, {5, 1}});
  }
  SUBCASE("universal vertices") {
    CHECK(degree_stats(complete_split(7, 2)).universal_count == 2);
    CHECK(degree_stats(complete(4)).universal_count == 4);
    CHECK(degree_stats(path(3)).universal_count == 1);
    CHECK(degree_stats(empty_graph(1)).universal_count == 1);
  }
}

TEST_CASE("connectivity and cyclomatic number") {
  CHECK(is_connected(path(4)));
  CHECK_FALSE(is_connected(from_edge_list(4, {{0, 1}, {2, 3}})));
  CHECK(is_connected(complete_split(7, 2)));
  CHECK(is_connected(empty_graph(1)));
  CHECK_FALSE(is_connected(empty_graph(2)));

  CHECK(cyclomatic_number(star(9)) == 0);
  CHECK(cyclomatic_number(cycle(6)) == 1);
  CHECK(cyclomatic_number(wheel(5)) == 4);
  CHECK_THROWS_AS(cyclomatic_number(from_edge_list(4, {{0, 1}, {2, 3}})), PreconditionError);
}

TEST_CASE("classification") {
  SUBCASE("P_4 is balanced bidegreed") {
    const auto c = classify(path(4));
    CHECK(c.is_bidegreed);
    CHECK(c.is_balanced_bidegreed);
    CHECK(c.is_tree);
    CHECK(c.cyclomatic == 0);
    CHECK_FALSE(c.is_dominating);
  }
  SUBCASE("W_6") {
    const auto c = classify(wheel(6));
    CHECK(c.is_bidegreed);
    CHECK(c.is_dominating);
    CHECK_FALSE(c.is_balanced_bidegreed);
    CHECK(c.degree_class == 2);
  }
  SUBCASE("K_4") {
    const auto c = classify(complete(4));
    CHECK(c.is_regular);
    CHECK_FALSE(c.is_bidegreed);
    CHECK_FALSE(c.is_dominating);
    CHECK(c.complete_split_k == 3);
  }
  SUBCASE("unicyclic") {
    const auto c = classify(cycle(5));
    CHECK(c.is_unicyclic);
    CHECK(c.is_regular);
    CHECK_FALSE(c.is_tree);
  }
  SUBCASE("disconnected graphs carry no cyclomatic number") {
    const auto c = classify(from_edge_list(4, {{0, 1}, {2, 3}}));
    CHECK_FALSE(c.is_connected);
    CHECK_FALSE(c.cyclomatic.has_value());
    CHECK_FALSE(c.is_tree);
  }
  SUBCASE("complete split detection") {
    for (int n = 3; n <= 9; ++n)
      for (int k = 1; k < n; ++k) CHECK(classify(complete_split(n, k)).complete_split_k == k);
    CHECK_FALSE(classify(wheel(6)).complete_split_k.has_value());
    CHECK_FALSE(classify(path(4)).complete_split_k.has_value());
  }
}

TEST_CASE("complement and relabel") {
  const Graph g = path(4);
  const Graph c = complement(g);
  CHECK(c.size() == 3);
  CHECK(complement(c) == g);
  const std::vector<int> perm{3, 1, 2, 0};
  const Graph r = relabel(g, perm);
  CHECK(r.adjacent(3, 1));
  CHECK(r.adjacent(2, 0));
  CHECK(r.size() == 3);
  CHECK_THROWS_AS(relabel(g, std::vector<int>{0, 0, 1, 2}), InputError);
}
