#include "helpers.hpp"

#include "irreg/generators.hpp"
#include "irreg/measures.hpp"

#include <doctest.h>

using namespace irreg;

namespace {

const BoundRecord& find(const std::vector<BoundRecord>& records, const std::string& id) {
  for (const auto& r : records)
    if (r.bound_id == id) return r;
  FAIL("missing record " << id);
  return records.front();
}

}  // namespace

TEST_CASE("report lists every bound in a fixed order") {
  const auto records = bound_report(path(5));
  REQUIRE(records.size() == bound_ids().size());
  for (std::size_t i = 0; i < records.size(); ++i) CHECK(records[i].bound_id == bound_ids()[i]);
}

TEST_CASE("balanced bidegreed graph attains the range bounds") {
  const Graph prism = named("trigonal_prism");
  std::vector<Edge> chosen;
  for (const auto& e : prism.edges())
    if (e.u / 3 == e.v / 3) chosen.push_back(e);
  const auto records = bound_report(subdivide_edges(prism, chosen));
  for (const char* id : {"T2i", "T2ii", "T2iii"}) {
    const auto& r = find(records, id);
    CHECK(r.holds);
    CHECK(r.is_equality);
    CHECK(r.agreement == Agreement::confirmed);
  }
  CHECK(find(records, "T2ii").lhs == 6);
}

TEST_CASE("K_{2,3,5} variance bound is strict") {
  const auto records = bound_report(complete_multipartite(std::vector<int>{2, 3, 5}));
  const auto& t5 = find(records, "T5");
  CHECK(t5.relation == Relation::ge);
  CHECK(t5.lhs == make_rational(39, 25));
  // (N_min + N_max)^2 / n^4 * IRR * IRD = 49/10^4 * 15 * 60/7
  CHECK(t5.rhs == make_rational(63, 100));
  CHECK_FALSE(t5.is_equality);
  const auto& t4 = find(records, "T4");
  CHECK(t4.lhs == 12);
  CHECK(t4.rhs == make_rational(60, 7) * make_rational(7, 10));
}

TEST_CASE("regular graphs meet two-sided bounds with equality at zero") {
  const auto records = bound_report(cycle(6));
  for (const char* id : {"T2i", "T2ii", "T2iii", "T4", "T5", "P12"}) {
    const auto& r = find(records, id);
    CHECK(r.applicable);
    CHECK(r.is_equality);
    CHECK(r.lhs == 0);
    CHECK(r.agreement == Agreement::confirmed);
  }
  CHECK_FALSE(find(records, "C15").applicable);
}

TEST_CASE("unbalanced bidegreed graphs attain the first range bound") {
  // The stated condition (regular or balanced) predicts strict inequality for
  // K_{1,3}; the bound is attained, so the record reports the mismatch.
  const auto& r = find(bound_report(star(4)), "T2i");
  CHECK(r.is_equality);
  CHECK_FALSE(r.predicted_equality);
  CHECK(r.claim_ambiguous);
  CHECK(r.equality_mismatch());
  CHECK_FALSE(r.violated());
}

TEST_CASE("deviation lower bound is strict when the middle degree is the average") {
  // degrees (3,2,2,2,1): average 2 lies in the degree set
  const Graph g = from_edge_list(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
  const auto& r = find(bound_report(g), "T4");
  CHECK(r.holds);
  CHECK(r.lhs == 2);
  CHECK(r.rhs == make_rational(4, 5));
  CHECK_FALSE(r.is_equality);
  CHECK(r.agreement == Agreement::confirmed);
}

TEST_CASE("bidegreed graphs attain both lower bounds") {
  for (const Graph& g : {star(6), wheel(7), complete_split(9, 4), path(6)}) {
    const auto records = bound_report(g);
    CHECK(find(records, "T4").is_equality);
    CHECK(find(records, "T5").is_equality);
    CHECK(find(records, "P7").applicable);
  }
}

TEST_CASE("applicability gates") {
  const auto tree = bound_report(path(6));
  CHECK_FALSE(find(tree, "C30").applicable);
  CHECK_FALSE(find(tree, "P11").applicable);
  CHECK(find(tree, "P12").applicable);

  const auto wheel_records = bound_report(wheel(6));
  CHECK(find(wheel_records, "P11").applicable);
  CHECK(find(wheel_records, "C15").applicable);

  const auto disconnected = bound_report(from_edge_list(5, {{0, 1}, {1, 2}, {3, 4}}));
  CHECK_FALSE(find(disconnected, "P12").applicable);
  CHECK_FALSE(find(disconnected, "L10").applicable);
  CHECK(find(disconnected, "T2ii").applicable);
}

TEST_CASE("complete split graphs attain the dominating bound") {
  for (int n = 4; n <= 10; ++n)
    for (int k = 1; k < n - 1; ++k) {
      const auto& r = find(bound_report(complete_split(n, k)), "P11");
      CHECK(r.applicable);
      CHECK(r.holds);
      CHECK(r.is_equality);
    }
}

TEST_CASE("record evaluation") {
  const auto strict = make_record("x", Relation::lt, 1, 2, true);
  CHECK(strict.holds);
  const auto broken = make_record("x", Relation::lt, 2, 2, true);
  CHECK(broken.violated());
  const auto off = make_record("x", Relation::le, 3, 2, false);
  CHECK_FALSE(off.violated());
  const auto iff_ok = make_record("x", Relation::le, 2, 2, true, EqualityClaim::iff, true);
  CHECK(iff_ok.agreement == Agreement::confirmed);
  const auto iff_bad = make_record("x", Relation::le, 1, 2, true, EqualityClaim::iff, true);
  CHECK(iff_bad.equality_mismatch());
  const auto if_only = make_record("x", Relation::le, 2, 2, true, EqualityClaim::if_only, false);
  CHECK(if_only.agreement == Agreement::confirmed);
  const auto if_bad = make_record("x", Relation::le, 1, 2, true, EqualityClaim::if_only, true);
  CHECK(if_bad.equality_mismatch());
}
