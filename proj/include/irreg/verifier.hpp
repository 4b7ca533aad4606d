#pragma once

#include "irreg/enumeration.hpp"
#include "irreg/measures.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace irreg {

/// A range of enumeration slices, n in [min_n, max_n].
struct PopulationSpec {
  int min_n = 1;
  int max_n = 6;
  std::optional<int> m;
  bool connected_only = false;
  bool irregular_only = false;
  PopulationKind kind = PopulationKind::all;

  std::string describe() const;
};

/// All class representatives of the population, ordered by (n, canonical code).
std::vector<Graph> materialize(const PopulationSpec& spec, int workers = 1);

struct Violation {
  std::string graph;
  std::string check_id;
  Rational lhs;
  Rational rhs;
  Relation relation = Relation::le;
  std::string reason;  // "inequality" or "equality-condition"
};

struct Finding {
  std::string graph;
  std::string check_id;
  bool observed_equality = false;
  bool predicted_equality = false;
};

struct EqualityCase {
  std::string graph;
  std::string check_id;
};

struct VerificationReport {
  std::string suite_id;
  std::string population;
  long long graphs_checked = 0;
  long long checks_evaluated = 0;
  std::vector<Violation> violations;
  std::vector<Finding> findings;
  std::vector<EqualityCase> equality_cases;
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return violations.empty(); }
};

/// Suite groups: bounds, decomposition, bidegreed, balanced, T21, trees,
/// cyclic, omega, spectral, lemma9, conj1, conj2, all. Any individual check
/// id (e.g. "C15", "P14", "C25") is accepted as a suite too.
const std::vector<std::string>& suite_ids();

/// Per-graph records of a suite (population-level checks such as lemma9 are
/// not included). Throws InputError for unknown suites.
std::vector<BoundRecord> suite_records(const GraphProfile& p, const std::string& suite_id);

VerificationReport run_suite(std::span<const Graph> graphs, const std::string& suite_id,
                             const std::string& population_description, int workers = 1);
VerificationReport run_suite(const PopulationSpec& population, const std::string& suite_id, int workers = 1);

/// S >= IRD and Var >= IRR*IRD/n^2; equality cross-checked against
/// Ds subset of {min, 2m/n, max}. Mismatches are findings.
VerificationReport check_conjecture1(std::span<const Graph> graphs, const std::string& population_description);
/// 2n Var >= S for irregular graphs; equality cases are listed.
VerificationReport check_conjecture2(std::span<const Graph> graphs, const std::string& population_description);

/// Canonical code when available, plain graph6 otherwise.
std::string graph_label(const Graph& g);
/// "CS(n,k)" for complete split graphs, the canonical code otherwise.
std::string describe_graph(const Graph& g);

struct ExtremalResult {
  int n = 0;
  int m = 0;
  long long classes = 0;
  Rational max_s;
  Rational max_var;
  std::vector<std::string> max_s_graphs;
  std::vector<std::string> max_var_graphs;
  /// Every maximizer of S also maximizes Var.
  bool coincide = false;
};

/// Exact maximizers of S and Var over the connected classes with n vertices
/// and m edges. Throws InputError when that set is empty.
ExtremalResult extremal_search(int n, int m, int workers = 1);

struct UniversalCensus {
  int n = 0;
  int m = 0;
  long long irregular_classes = 0;
  std::map<int, long long> by_universal_count;  // q -> classes, q >= 1 only
  std::map<int, std::vector<std::string>> graphs_by_universal_count;
};

/// Irregular connected classes with n vertices and m edges that have universal vertices.
UniversalCensus universal_census(int n, int m, int workers = 1);

/// Divisibility rule for the complete split graph with largest degree
/// deviation. For n = 2 mod 3 the two listed values tie; the smaller is returned.
int max_deviation_split_k(int n);
/// Every k the rule allows (one value, or two tied values when n = 2 mod 3).
std::vector<int> split_k_rule(int n);
/// All k in [1, n-1] maximizing S(CS(n,k)), by direct evaluation.
std::vector<int> split_k_argmax(int n);

}  // namespace irreg
