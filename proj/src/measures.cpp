#include "irreg/measures.hpp"

#include "irreg/errors.hpp"

#include <algorithm>

namespace irreg {

MeasureSet measure_set_from_degrees(std::span<const int> degrees) {
  const long long n = static_cast<long long>(degrees.size());
  if (n == 0) throw InputError("measures need at least one vertex");
  long long twice_m = 0;
  for (int d : degrees) {
    if (d < 0 || d >= n) throw InputError("degree " + std::to_string(d) + " impossible on " + std::to_string(n) + " vertices");
    twice_m += d;
  }
  if (twice_m % 2 != 0) throw InputError("degree sum must be even");

  BigInt m1 = 0, abs_dev = 0, sq_dev = 0;
  int max_d = degrees[0], min_d = degrees[0];
  long long n_max = 0, n_min = 0;
  for (int d : degrees) {
    max_d = std::max(max_d, d);
    min_d = std::min(min_d, d);
  }
  for (int d : degrees) {
    // Deviations scaled by n keep everything integral.
    const long long dev = n * d - twice_m;
    m1 += BigInt(d) * d;
    abs_dev += dev < 0 ? -dev : dev;
    sq_dev += BigInt(dev) * dev;
    if (d == max_d) ++n_max;
    if (d == min_d) ++n_min;
  }
  const long long gap = max_d - min_d;

  MeasureSet ms;
  ms.m1 = Rational(m1);
  ms.s = Rational(abs_dev, BigInt(n));
  ms.var = Rational(sq_dev, BigInt(n) * n * n);
  ms.ird = Rational(BigInt(2) * n_max * n_min * gap, BigInt(n_max + n_min));
  ms.irr = Rational(BigInt(n) * gap, BigInt(2));
  if (ms.s != 0) ms.omega = ms.var / ms.s;
  return ms;
}

MeasureSet measure_set(const Graph& g) { return measure_set_from_degrees(g.degrees()); }

Rational first_zagreb(const Graph& g) {
  BigInt sum = 0;
  for (int d : g.degrees()) sum += BigInt(d) * d;
  return Rational(sum);
}

BidegreedIdentities bidegreed_identities(const Graph& g) {
  const auto stats = degree_stats(g);
  const auto cls = classify(g, stats);
  if (!cls.is_connected || !cls.is_bidegreed) {
    throw PreconditionError("bidegreed identities need a connected bidegreed graph");
  }
  const auto ms = measure_set(g);
  const long long n = g.order();
  const long long gap = stats.max_degree - stats.min_degree;
  const long long n_max = stats.count(stats.max_degree);
  const long long n_min = stats.count(stats.min_degree);

  BidegreedIdentities out;
  out.s_equals_ird = ms.s == ms.ird;
  out.var_closed = make_rational(n_max * n_min * gap * gap, n * n);
  out.var_closed_matches = out.var_closed == ms.var;
  out.prop14_holds = Rational(2 * n) * ms.var == Rational(gap) * ms.s;
  return out;
}

VarianceDecomposition variance_decomposition(const Graph& g) {
  const auto stats = degree_stats(g);
  const auto ms = measure_set(g);
  const Rational& avg = stats.average_degree;
  VarianceDecomposition out;
  out.product_bound = (Rational(stats.max_degree) - avg) * (avg - Rational(stats.min_degree));
  out.is_exact = out.product_bound == ms.var;
  return out;
}

TreeFormulas tree_formulas(const Graph& t) {
  const int n_int = t.order();
  if (n_int < 2 || t.size() != n_int - 1 || !is_connected(t)) {
    throw PreconditionError("tree formulas need a tree with at least two vertices");
  }
  const auto stats = degree_stats(t);
  const long long n = n_int;
  const long long max_d = stats.max_degree;
  const long long n_max = stats.count(stats.max_degree);
  const long long n1 = stats.count(1);
  const long long n2 = stats.count(2);

  long long high_excess = 0;  // sum_{i>=3} N_i (i-2)
  long long high_pairs = 0;   // sum_{i>=3} N_i (i-1)(i-2)
  for (const auto& [deg, cnt] : stats.histogram) {
    if (deg < 3) continue;
    high_excess += static_cast<long long>(cnt) * (deg - 2);
    high_pairs += static_cast<long long>(cnt) * (deg - 1) * (deg - 2);
  }

  TreeFormulas out;
  out.s_closed = make_rational(4 * (n - 2), n) + make_rational(2 * (n - 2) * high_excess, n);
  out.var_closed = make_rational(2 * (n - 2), n * n) + make_rational(high_pairs, n);
  out.irr_closed = make_rational(n * (max_d - 1), 2);
  const Rational base = Rational(4 * n_max * (max_d - 1));
  out.ird_upper = (base + Rational(2 * n_max * high_excess * (max_d - 1))) / Rational(2 + (max_d - 1) * n_max);
  out.ird_upper_coarse = (base + Rational(2 * n_max * (max_d - 2) * (max_d - 1) * (n - n1 - n2))) /
                         Rational(2 + (max_d - 1) * n_max);
  out.ird_lower = (base + Rational(2 * n_max * n_max * (max_d - 2) * (max_d - 1))) /
                  Rational(2 + (max_d - 2) * (n - n1 - n2) + n_max);
  out.n1_based_s = make_rational(2 * (n - 2) * n1, n);
  return out;
}

CyclicFormulas cyclic_formulas(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("cyclic formulas need a connected graph");
  const long long n = g.order();
  const long long m = g.size();
  const long long c = m - n + 1;
  if (c < 1 || 2 * c > n + 2) {
    throw PreconditionError("cyclic formulas need 1 <= c <= (n+2)/2, got c=" + std::to_string(c));
  }
  const auto stats = degree_stats(g);
  const auto ms = measure_set(g);

  long long s_sum = 0, var_sum = 0, excess = 0, gap_sum = 0;
  for (const auto& [deg, cnt] : stats.histogram) {
    if (deg < 3) continue;
    s_sum += static_cast<long long>(cnt) * (deg * n - 2 * m);
    var_sum += static_cast<long long>(cnt) * (deg - 1) * (deg - 2);
    excess += static_cast<long long>(cnt) * (deg - 2);
    if (deg >= 4) gap_sum += static_cast<long long>(cnt) * (deg - 2) * (deg - 3);
  }

  CyclicFormulas out;
  out.s_closed = make_rational(2 * s_sum, n);
  out.var_closed = make_rational(var_sum, n) - make_rational(2 * (2 * m - n) * (m - n), n * n);
  if (c == 1) {
    out.unicyclic_s = Rational(2 * stats.count(1));
    out.unicyclic_s_sum = Rational(2 * excess);
    out.unicyclic_gap = Rational(gap_sum);
  }
  if (ms.omega) {
    out.omega_floor = make_rational(1, n) - Rational(2) / ms.s;
    out.omega_floor_slack = *ms.omega - *out.omega_floor;
  }
  return out;
}

CenteredBound centered_sequence_bound(std::span<const Rational> a, std::span<const Rational> x) {
  if (a.empty() || a.size() != x.size()) throw InputError("sequences must be non-empty and of equal length");
  Rational sum_x = 0, sum_abs = 0, dot = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum_x += x[i];
    sum_abs += abs(x[i]);
    dot += a[i] * x[i];
  }
  if (sum_x != 0) throw InputError("x must sum to zero");
  if (sum_abs != 1) throw InputError("absolute values of x must sum to one");
  const auto [lo, hi] = std::minmax_element(a.begin(), a.end());
  CenteredBound out;
  out.lhs = abs(dot);
  out.rhs = (*hi - *lo) / 2;
  out.holds = out.lhs <= out.rhs;
  out.tight = out.lhs == out.rhs;
  return out;
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::lt: return "<";
    case Relation::ge: return ">=";
    case Relation::eq: return "==";
  }
  return "?";
}

std::string to_string(Agreement a) {
  switch (a) {
    case Agreement::confirmed: return "confirmed";
    case Agreement::stated_condition_violated: return "condition-violated";
    case Agreement::not_applicable: return "not-applicable";
  }
  return "?";
}

BoundRecord make_record(std::string id, Relation rel, Rational lhs, Rational rhs, bool applicable,
                        EqualityClaim claim, bool predicted_equality, bool ambiguous) {
  BoundRecord r;
  r.bound_id = std::move(id);
  r.relation = rel;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.applicable = applicable;
  r.claim = claim;
  r.predicted_equality = predicted_equality;
  r.claim_ambiguous = ambiguous;
  r.is_equality = r.lhs == r.rhs;
  switch (rel) {
    case Relation::le: r.holds = r.lhs <= r.rhs; break;
    case Relation::lt: r.holds = r.lhs < r.rhs; break;
    case Relation::ge: r.holds = r.lhs >= r.rhs; break;
    case Relation::eq: r.holds = r.is_equality; break;
  }
  if (!applicable) {
    r.agreement = Agreement::not_applicable;
  } else if (claim == EqualityClaim::iff) {
    r.agreement = r.is_equality == predicted_equality ? Agreement::confirmed : Agreement::stated_condition_violated;
  } else if (claim == EqualityClaim::if_only) {
    r.agreement = predicted_equality && !r.is_equality ? Agreement::stated_condition_violated : Agreement::confirmed;
  } else {
    r.agreement = Agreement::confirmed;
  }
  return r;
}

GraphProfile profile(const Graph& g) {
  GraphProfile p{g, degree_stats(g), {}, measure_set(g)};
  p.cls = classify(g, p.stats);
  return p;
}

const std::vector<std::string>& bound_ids() {
  static const std::vector<std::string> ids = {"T2i", "T2ii", "T2iii", "T4", "T5", "P7",
                                               "P11", "P12",  "L10",   "C15", "C30", "P34"};
  return ids;
}

std::vector<BoundRecord> bound_report(const GraphProfile& p) {
  const auto& st = p.stats;
  const auto& cls = p.cls;
  const auto& ms = p.measures;
  const long long n = p.graph.order();
  const long long m = p.graph.size();
  const long long gap = st.max_degree - st.min_degree;
  const long long n_max = st.count(st.max_degree);
  const long long n_min = st.count(st.min_degree);
  const Rational& avg = st.average_degree;
  const bool regular_or_balanced = cls.is_regular || cls.is_balanced_bidegreed;
  const bool at_most_two = cls.degree_class <= 2;
  const bool low_cyclic = cls.cyclomatic && *cls.cyclomatic >= 1 && 2 * *cls.cyclomatic <= n + 2;

  using enum Relation;
  std::vector<BoundRecord> out;
  out.reserve(bound_ids().size());

  out.push_back(make_record("T2i", le, ms.var, make_rational(gap, 2 * n) * ms.s, true, EqualityClaim::iff,
                            regular_or_balanced, /*ambiguous=*/true));
  out.push_back(make_record("T2ii", le, ms.s, ms.irr, true, EqualityClaim::iff, regular_or_balanced));
  out.push_back(make_record("T2iii", le, ms.var, make_rational(gap * gap, 4), true, EqualityClaim::iff,
                            regular_or_balanced));
  out.push_back(make_record("T4", ge, ms.s, make_rational(2 * n_max * n_min * gap, n), true, EqualityClaim::iff,
                            at_most_two, /*ambiguous=*/true));
  {
    const Rational weight = Rational(BigInt(n_min + n_max) * (n_min + n_max), BigInt(n) * n * n * n);
    out.push_back(make_record("T5", ge, ms.var, weight * ms.irr * ms.ird, true, EqualityClaim::iff, at_most_two));
  }
  out.push_back(make_record("P7", le, ms.var, make_rational(gap * gap, 4), cls.is_connected && cls.is_bidegreed,
                            EqualityClaim::iff, cls.is_balanced_bidegreed));
  {
    Rational rhs = 0;
    if (cls.is_dominating) {
      const long long delta = st.min_degree;
      rhs = avg * Rational(2 * m + (n - 1) * (n - 1 - delta)) / Rational(2 * n - 1 - delta) - avg * avg;
    }
    out.push_back(make_record("P11", le, ms.var, rhs, cls.is_dominating, EqualityClaim::if_only,
                              cls.complete_split_k.has_value()));
  }
  out.push_back(make_record("P12", le, ms.s * ms.s, Rational(n * n) * ms.var, cls.is_connected, EqualityClaim::iff,
                            regular_or_balanced));
  out.push_back(make_record("L10", le, ms.m1, make_rational(2 * m * (2 * m + (n - 1) * gap), n + gap),
                            cls.is_connected, EqualityClaim::if_only,
                            cls.is_regular || cls.complete_split_k.has_value()));
  out.push_back(make_record("C15", lt, ms.omega.value_or(Rational(0)), make_rational(1, 2), !cls.is_regular));
  {
    const bool applicable = cls.is_connected && !cls.is_regular && low_cyclic;
    Rational rhs = ms.omega ? make_rational(1, n) - Rational(2) / ms.s : Rational(0);
    out.push_back(make_record("C30", ge, ms.omega.value_or(Rational(0)), rhs, applicable));
  }
  {
    Rational rhs = 0;
    if (low_cyclic) rhs = Rational(2 * (st.count(1) + 2LL * *cls.cyclomatic - 2));
    out.push_back(make_record("P34", le, ms.s, rhs, low_cyclic, EqualityClaim::iff, cls.is_unicyclic));
  }
  return out;
}

std::vector<BoundRecord> bound_report(const Graph& g) { return bound_report(profile(g)); }

}  // namespace irreg
