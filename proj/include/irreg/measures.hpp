#pragma once

#include "irreg/graph.hpp"
#include "irreg/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace irreg {

/// Degree-based irregularity measures, all exact.
struct MeasureSet {
  Rational m1;    // first Zagreb index, sum of squared degrees
  Rational s;     // degree deviation, sum |d_i - 2m/n|
  Rational var;   // degree variance, mean of (d_i - 2m/n)^2
  Rational ird;   // 2 N_max N_min / (N_max + N_min) * (max - min)
  Rational irr;   // n/2 * (max - min)
  std::optional<Rational> omega;  // var / s, only for irregular graphs
};

/// Definitional evaluation from the degree sequence of `g`.
MeasureSet measure_set(const Graph& g);
/// Same, from a bare degree sequence (used for closed-form cross-checks).
MeasureSet measure_set_from_degrees(std::span<const int> degrees);

Rational first_zagreb(const Graph& g);

struct BidegreedIdentities {
  bool s_equals_ird = false;
  Rational var_closed;       // N_max N_min (max - min)^2 / n^2
  bool var_closed_matches = false;
  bool prop14_holds = false;  // 2n Var = (max - min) S
};

/// Requires a connected bidegreed graph; throws PreconditionError otherwise.
BidegreedIdentities bidegreed_identities(const Graph& g);

struct VarianceDecomposition {
  Rational product_bound;  // (max - avg)(avg - min)
  bool is_exact = false;
};

VarianceDecomposition variance_decomposition(const Graph& g);

struct TreeFormulas {
  Rational s_closed;
  Rational var_closed;
  Rational irr_closed;
  Rational ird_upper;         // tight form, depends on the full N_i histogram
  Rational ird_upper_coarse;  // only uses n, N_1, N_2, N_max
  Rational ird_lower;
  Rational n1_based_s;        // 2(n-2) N_1 / n
};

/// Requires a tree with n >= 2; throws PreconditionError otherwise.
TreeFormulas tree_formulas(const Graph& t);

struct CyclicFormulas {
  Rational s_closed;
  Rational var_closed;
  std::optional<Rational> unicyclic_s;      // 2 N_1, unicyclic only
  std::optional<Rational> unicyclic_s_sum;  // 2 sum_{i>=3} N_i (i-2), unicyclic only
  std::optional<Rational> unicyclic_gap;    // sum_{i>=4} N_i (i-2)(i-3) = n Var - S, unicyclic only
  std::optional<Rational> omega_floor;      // 1/n - 2/S, irregular only
  std::optional<Rational> omega_floor_slack;
};

/// Requires a connected graph with 1 <= c <= (n+2)/2; throws PreconditionError otherwise.
CyclicFormulas cyclic_formulas(const Graph& g);

struct CenteredBound {
  Rational lhs;  // |sum a_i x_i|
  Rational rhs;  // (max a - min a) / 2
  bool holds = false;
  bool tight = false;
};

/// Requires sum x_i = 0 and sum |x_i| = 1; throws InputError otherwise.
CenteredBound centered_sequence_bound(std::span<const Rational> a, std::span<const Rational> x);

// ---------------------------------------------------------------------------
// Bound records

enum class Relation { le, lt, ge, eq };
enum class EqualityClaim { none, iff, if_only };
enum class Agreement { confirmed, stated_condition_violated, not_applicable };

std::string to_string(Relation r);
std::string to_string(Agreement a);

/// One evaluated inequality (or identity) instance on one graph.
struct BoundRecord {
  std::string bound_id;
  Relation relation = Relation::le;
  Rational lhs;
  Rational rhs;
  bool applicable = true;
  bool holds = true;
  bool is_equality = false;
  bool predicted_equality = false;
  EqualityClaim claim = EqualityClaim::none;
  /// Equality-condition mismatches on this record are findings, not failures.
  bool claim_ambiguous = false;
  Agreement agreement = Agreement::not_applicable;

  bool violated() const { return applicable && !holds; }
  bool equality_mismatch() const { return applicable && agreement == Agreement::stated_condition_violated; }
};

/// Evaluates lhs `rel` rhs and derives holds / is_equality / agreement.
BoundRecord make_record(std::string id, Relation rel, Rational lhs, Rational rhs, bool applicable,
                        EqualityClaim claim = EqualityClaim::none, bool predicted_equality = false,
                        bool ambiguous = false);

/// Everything the per-graph checks need, computed once.
struct GraphProfile {
  Graph graph;
  DegreeStats stats;
  Classification cls;
  MeasureSet measures;
};

GraphProfile profile(const Graph& g);

/// The fixed suite T2i, T2ii, T2iii, T4, T5, P7, P11, P12, L10, C15, C30, P34.
std::vector<BoundRecord> bound_report(const Graph& g);
std::vector<BoundRecord> bound_report(const GraphProfile& p);

const std::vector<std::string>& bound_ids();

}  // namespace irreg
