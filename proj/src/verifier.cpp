#include "irreg/verifier.hpp"

#include "irreg/canonical.hpp"
#include "irreg/errors.hpp"
#include "irreg/generators.hpp"
#include "irreg/graph_io.hpp"
#include "irreg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <thread>

namespace irreg {

std::string PopulationSpec::describe() const {
  std::string d = to_string(kind);
  d += " graphs, n=" + std::to_string(min_n) + ".." + std::to_string(max_n);
  if (m) d += ", m=" + std::to_string(*m);
  if (kind == PopulationKind::all) d += connected_only ? ", connected" : ", connected and disconnected";
  if (irregular_only) d += ", irregular";
  d += "; counted as isomorphism classes";
  return d;
}

std::vector<Graph> materialize(const PopulationSpec& spec, int workers) {
  if (spec.min_n > spec.max_n) throw InputError("empty n range");
  std::vector<Graph> out;
  const int lowest = spec.kind == PopulationKind::unicyclic ? 3 : 1;
  for (int n = std::max(spec.min_n, lowest); n <= spec.max_n; ++n) {
    if (spec.m && *spec.m > n * (n - 1) / 2) continue;
    EnumerationSpec es{n, spec.m, spec.connected_only, spec.irregular_only, spec.kind};
    for (auto& rep : enumerate(es, workers)) out.push_back(std::move(rep.graph));
  }
  return out;
}

std::string graph_label(const Graph& g) {
  return g.order() <= kCanonicalMaxOrder ? canonical_code(g).bytes : to_graph6(g);
}

std::string describe_graph(const Graph& g) {
  const auto cls = classify(g);
  if (cls.complete_split_k && *cls.complete_split_k < g.order() - 1) {
    return "CS(" + std::to_string(g.order()) + "," + std::to_string(*cls.complete_split_k) + ")";
  }
  return graph_label(g);
}

namespace {

using enum Relation;

// Records that state an identity between two computations.
BoundRecord identity(std::string id, Rational lhs, Rational rhs, bool applicable) {
  return make_record(std::move(id), eq, std::move(lhs), std::move(rhs), applicable);
}

bool degrees_within(const DegreeStats& st, std::initializer_list<int> allowed) {
  for (int d : st.degree_set) {
    if (std::find(allowed.begin(), allowed.end(), d) == allowed.end()) return false;
  }
  return true;
}

void decomposition_records(const GraphProfile& p, std::vector<BoundRecord>& out) {
  const auto& st = p.stats;
  const Rational& avg = st.average_degree;
  const Rational product = (Rational(st.max_degree) - avg) * (avg - Rational(st.min_degree));
  out.push_back(make_record("P18", le, p.measures.var, product, p.cls.is_connected, EqualityClaim::if_only,
                            p.cls.is_bidegreed));
  out.push_back(identity("P19", p.measures.var, product, p.cls.is_connected && p.cls.is_bidegreed));
}

void bidegreed_records(const GraphProfile& p, std::vector<BoundRecord>& out) {
  const bool ok = p.cls.is_connected && p.cls.is_bidegreed;
  const auto& st = p.stats;
  const auto& ms = p.measures;
  const long long n = p.graph.order();
  const long long gap = st.max_degree - st.min_degree;
  const long long n_max = st.count(st.max_degree);
  const long long n_min = st.count(st.min_degree);
  out.push_back(identity("P3", ms.s, ms.ird, ok));
  out.push_back(identity("P14", Rational(2 * n) * ms.var, Rational(gap) * ms.s, ok));
  out.push_back(identity("C6", ms.var, make_rational(n_max * n_min * gap * gap, n * n), ok));
}

void balanced_records(const GraphProfile& p, std::vector<BoundRecord>& out) {
  const bool ok = p.cls.is_balanced_bidegreed;
  const auto& ms = p.measures;
  const long long n = p.graph.order();
  out.push_back(identity("P8", ms.s, ms.irr, ok));
  out.push_back(identity("P13", Rational(n * n) * ms.var, ms.s * ms.s, ok));
}

void t21_records(const GraphProfile& p, std::vector<BoundRecord>& out) {
  // Counts assume no isolated vertex, so K1 is excluded.
  const bool ok = p.cls.is_connected && p.graph.order() >= 2;
  const long long n = p.graph.order();
  const long long c = p.cls.cyclomatic.value_or(0);
  long long excess = 0, excess1 = 0;
  for (const auto& [deg, cnt] : p.stats.histogram) {
    if (deg < 3) continue;
    excess += static_cast<long long>(deg - 2) * cnt;
    excess1 += static_cast<long long>(deg - 1) * cnt;
  }
  out.push_back(identity("T21a", Rational(p.stats.count(1)), Rational(2 - 2 * c + excess), ok));
  out.push_back(identity("T21b", Rational(p.stats.count(2)), Rational(2 * c + n - 2 - excess1), ok));
}

void tree_records(const GraphProfile& p, std::vector<BoundRecord>& out) {
  const bool ok = p.cls.is_tree && p.graph.order() >= 2;
  const long long n = p.graph.order();
  const auto& st = p.stats;
  const auto& ms = p.measures;
  const bool is_path = ok && st.max_degree <= 2;
  const bool top_only = degrees_within(st, {1, 2, st.max_degree});

  std::optional<TreeFormulas> tf;
  if (ok) tf = tree_formulas(p.graph);
  auto val = [&](auto member) { return tf ? (*tf).*member : Rational(0); };

  out.push_back(identity("T22.1", ms.s, val(&TreeFormulas::s_closed), ok));
  out.push_back(identity("T22.2", ms.var, val(&TreeFormulas::var_closed), ok));
  out.push_back(identity("T22.3", ms.irr, val(&TreeFormulas::irr_closed), ok));
  out.push_back(make_record("T22.4", le, ms.ird, val(&TreeFormulas::ird_upper), ok, EqualityClaim::iff, top_only));
  out.push_back(make_record("C23.1", ge, ms.s, make_rational(4 * (n - 2), std::max(n, 1LL)), ok && n >= 3,
                            EqualityClaim::iff, is_path));
  out.push_back(make_record("C23.2", ge, ms.var, make_rational(2 * (n - 2), std::max(n * n, 1LL)), ok && n >= 3,
                            EqualityClaim::iff, is_path));
  out.push_back(make_record("C23.3", ge, ms.irr, make_rational(n, 2), ok && n >= 3, EqualityClaim::iff, is_path));
  out.push_back(make_record("C23.4", ge, ms.ird, val(&TreeFormulas::ird_lower), ok, EqualityClaim::iff, top_only));
  out.push_back(
      make_record("C23.5", le, ms.ird, val(&TreeFormulas::ird_upper_coarse), ok, EqualityClaim::iff, top_only));
  {
    Rational rhs = 0;
    if (ok) {
      for (const auto& [deg, cnt] : st.histogram) {
        if (deg < 3) continue;
        rhs += Rational(static_cast<long long>(cnt) * (deg - 2)) * (Rational(deg) - make_rational(2 * n - 2, n));
      }
      rhs /= n;
    }
    const Rational lhs = ok ? ms.var - ms.s / (2 * n) : Rational(0);
    out.push_back(identity("C24", lhs, rhs, ok));
  }
  out.push_back(make_record("C25", ge, Rational(2 * n) * ms.var, ms.s, ok && n >= 4, EqualityClaim::iff, is_path));
  out.push_back(make_record("C26", ge, ms.s, ms.ird, ok && n >= 3, EqualityClaim::iff, p.cls.is_bidegreed));
  out.push_back(identity("P32", ms.s, val(&TreeFormulas::n1_based_s), ok && st.count(1) >= 2));
}

void cyclic_records(const GraphProfile& p, std::vector<BoundRecord>& out) {
  const long long n = p.graph.order();
  const auto& cls = p.cls;
  const bool ok = cls.cyclomatic && *cls.cyclomatic >= 1 && 2 * *cls.cyclomatic <= n + 2;
  const bool uni = ok && cls.is_unicyclic;
  const auto& st = p.stats;
  const auto& ms = p.measures;

  std::optional<CyclicFormulas> cf;
  if (ok) cf = cyclic_formulas(p.graph);
  out.push_back(identity("T27.S", ms.s, cf ? cf->s_closed : Rational(0), ok));
  out.push_back(identity("T27.Var", ms.var, cf ? cf->var_closed : Rational(0), ok));
  out.push_back(identity("C28.S", ms.s, uni ? *cf->unicyclic_s_sum : Rational(0), uni));
  out.push_back(identity("C28.gap", Rational(n) * ms.var - ms.s, uni ? *cf->unicyclic_gap : Rational(0), uni));
  out.push_back(identity("P33", ms.s, uni ? *cf->unicyclic_s : Rational(0), uni));
  out.push_back(make_record("C29", ge, ms.omega.value_or(Rational(0)), make_rational(1, std::max(n, 1LL)),
                            uni && !cls.is_regular, EqualityClaim::iff, degrees_within(st, {1, 2, 3})));
  out.push_back(make_record("C30", ge, ms.omega.value_or(Rational(0)),
                            cf && cf->omega_floor ? *cf->omega_floor : Rational(0), ok && !cls.is_regular));
  out.push_back(make_record("P34", le, ms.s, ok ? Rational(2 * (st.count(1) + 2 * *cls.cyclomatic - 2)) : Rational(0),
                            ok, EqualityClaim::iff, cls.is_unicyclic));

  // Subdividing edges of a unicyclic graph with degree set {1, D} keeps S and IRD at 2 N_1.
  const bool seed = uni && st.degree_set.size() == 2 && st.min_degree == 1 && st.max_degree >= 3;
  for (int count = 1; count <= 3; ++count) {
    const std::string id = "P31";
    if (!seed) {
      if (count == 1) out.push_back(identity(id, 0, 0, false));
      continue;
    }
    const auto inflated = measure_set(degree2_inflate(p.graph, count));
    const Rational target = Rational(2 * st.count(1));
    const bool all_equal = inflated.s == ms.s && inflated.ird == ms.ird && ms.s == ms.ird;
    out.push_back(identity(id, all_equal ? inflated.s : Rational(-1), target, true));
  }
}

void omega_records(const GraphProfile& p, std::vector<BoundRecord>& out) {
  const bool ok = p.cls.is_connected && p.cls.is_bidegreed;
  const long long n = p.graph.order();
  const long long gap = p.stats.max_degree - p.stats.min_degree;
  const Rational omega = p.measures.omega.value_or(Rational(0));
  out.push_back(identity("P17", omega, make_rational(gap, 2 * n), ok));
  out.push_back(identity("P35", omega, make_rational(1, 2 * n), ok && gap == 1));
}

void spectral_records(const GraphProfile& p, std::vector<BoundRecord>& out) {
  const bool eligible = p.cls.is_connected && !p.cls.is_regular;
  std::optional<TwoWalkParams> params;
  if (eligible) params = two_walk_params(p.graph);
  const bool ok = params.has_value();
  {
    const bool cs = eligible && p.cls.complete_split_k.has_value();
    out.push_back(identity("R2", Rational(ok ? 1 : 0), Rational(1), cs));
  }
  if (!ok) {
    out.push_back(identity("P20", 0, 0, false));
    return;
  }
  const Rational c = p.stats.average_degree;
  out.push_back(identity("P20", p.measures.var, c * params->a + params->b - c * c, true));
  out.push_back(make_record("2WL.a", ge, Rational(params->a), Rational(0), true));
  const double lambda = main_eigenvalues(*params).first;
  const double rho = spectral_radius_estimate(p.graph);
  out.push_back(make_record("2WL.radius", le, Rational(std::fabs(rho - lambda)), make_rational(1, 1000000), true));
}

BoundRecord conjecture_record(std::string id, Relation rel, Rational lhs, Rational rhs, bool applicable,
                              bool predicted) {
  return make_record(std::move(id), rel, std::move(lhs), std::move(rhs), applicable, EqualityClaim::iff, predicted,
                     /*ambiguous=*/true);
}

void conj1_records(const GraphProfile& p, std::vector<BoundRecord>& out) {
  const auto& st = p.stats;
  const auto& ms = p.measures;
  const long long n = p.graph.order();
  bool predicted = true;
  for (int d : st.degree_set) {
    if (d != st.min_degree && d != st.max_degree && Rational(d) != st.average_degree) predicted = false;
  }
  out.push_back(conjecture_record("Conj1.S", ge, ms.s, ms.ird, true, predicted));
  out.push_back(conjecture_record("Conj1.Var", ge, ms.var, ms.irr * ms.ird / (n * n), true, predicted));
}

void conj2_records(const GraphProfile& p, std::vector<BoundRecord>& out) {
  const long long n = p.graph.order();
  out.push_back(make_record("Conj2", ge, Rational(2 * n) * p.measures.var, p.measures.s, !p.cls.is_regular));
}

using RecordFn = void (*)(const GraphProfile&, std::vector<BoundRecord>&);

void bound_records(const GraphProfile& p, std::vector<BoundRecord>& out) {
  auto records = bound_report(p);
  out.insert(out.end(), std::make_move_iterator(records.begin()), std::make_move_iterator(records.end()));
}

const std::vector<std::pair<std::string, RecordFn>>& groups() {
  static const std::vector<std::pair<std::string, RecordFn>> g = {
      {"bounds", bound_records},   {"decomposition", decomposition_records},
      {"bidegreed", bidegreed_records}, {"balanced", balanced_records},
      {"T21", t21_records},        {"trees", tree_records},
      {"cyclic", cyclic_records},  {"omega", omega_records},
      {"spectral", spectral_records}, {"conj1", conj1_records},
      {"conj2", conj2_records},
  };
  return g;
}

bool is_theorem_group(const std::string& id) { return id != "conj1" && id != "conj2"; }

std::set<std::string> individual_ids() {
  static const std::set<std::string> ids = [] {
    std::set<std::string> all;
    // Probe every group with graphs that make all records present.
    for (const auto& g : {path(5), cycle(5), complete_split(5, 2), star(4)}) {
      const auto prof = profile(g);
      for (const auto& [name, fn] : groups()) {
        std::vector<BoundRecord> recs;
        fn(prof, recs);
        for (const auto& r : recs) all.insert(r.bound_id);
      }
    }
    all.insert("L9");
    return all;
  }();
  return ids;
}

/// Among connected irregular graphs of each order, every maximizer of
/// M1 has a universal vertex.
std::vector<std::pair<std::size_t, BoundRecord>> lemma9_records(std::span<const GraphProfile> profiles) {
  std::map<int, Rational> best;
  for (const auto& p : profiles) {
    if (!p.cls.is_connected || p.cls.is_regular) continue;
    auto [it, inserted] = best.try_emplace(p.graph.order(), p.measures.m1);
    if (!inserted && p.measures.m1 > it->second) it->second = p.measures.m1;
  }
  std::vector<std::pair<std::size_t, BoundRecord>> out;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const auto& p = profiles[i];
    if (!p.cls.is_connected || p.cls.is_regular || p.measures.m1 != best[p.graph.order()]) continue;
    out.emplace_back(i, make_record("L9", ge, Rational(p.stats.universal_count), Rational(1), true));
  }
  return out;
}

void tally(VerificationReport& report, const std::string& label, const BoundRecord& r, bool list_equalities) {
  if (!r.applicable) return;
  ++report.checks_evaluated;
  if (!r.holds) {
    report.violations.push_back({label, r.bound_id, r.lhs, r.rhs, r.relation, "inequality"});
    return;
  }
  if (r.equality_mismatch()) {
    if (r.claim_ambiguous) {
      report.findings.push_back({label, r.bound_id, r.is_equality, r.predicted_equality});
    } else {
      report.violations.push_back({label, r.bound_id, r.lhs, r.rhs, r.relation, "equality-condition"});
    }
  }
  if (list_equalities && r.is_equality) report.equality_cases.push_back({label, r.bound_id});
}

std::vector<GraphProfile> profiles_of(std::span<const Graph> graphs, int workers) {
  std::vector<GraphProfile> out(graphs.size());
  workers = std::max(1, workers);
  auto work = [&](int w) {
    for (std::size_t i = w; i < graphs.size(); i += workers) out[i] = profile(graphs[i]);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : groups()) out.push_back(name);
    out.push_back("lemma9");
    out.push_back("all");
    return out;
  }();
  return ids;
}

std::vector<BoundRecord> suite_records(const GraphProfile& p, const std::string& suite_id) {
  std::vector<BoundRecord> out;
  if (suite_id == "all") {
    // C30 and P34 live in both the bound suite and the cyclic suite; count them once.
    std::set<std::string> earlier;
    for (const auto& [name, fn] : groups()) {
      if (!is_theorem_group(name)) continue;
      std::vector<BoundRecord> recs;
      fn(p, recs);
      std::set<std::string> here;
      for (auto& r : recs) {
        here.insert(r.bound_id);
        if (!earlier.contains(r.bound_id)) out.push_back(std::move(r));
      }
      earlier.insert(here.begin(), here.end());
    }
    return out;
  }
  if (suite_id == "lemma9" || suite_id == "L9") return out;
  for (const auto& [name, fn] : groups()) {
    if (name == suite_id) {
      fn(p, out);
      return out;
    }
  }
  if (!individual_ids().contains(suite_id)) throw InputError("unknown suite '" + suite_id + "'");
  for (const auto& [name, fn] : groups()) {
    std::vector<BoundRecord> recs;
    fn(p, recs);
    for (auto& r : recs) {
      if (r.bound_id == suite_id) out.push_back(std::move(r));
    }
    if (!out.empty()) break;
  }
  return out;
}

VerificationReport run_suite(std::span<const Graph> graphs, const std::string& suite_id,
                             const std::string& population_description, int workers) {
  const auto start = std::chrono::steady_clock::now();
  const bool known = suite_id == "all" || suite_id == "lemma9" || individual_ids().contains(suite_id) ||
                     std::any_of(groups().begin(), groups().end(), [&](const auto& g) { return g.first == suite_id; });
  if (!known) throw InputError("unknown suite '" + suite_id + "'");

  VerificationReport report;
  report.suite_id = suite_id;
  report.population = population_description;
  report.graphs_checked = static_cast<long long>(graphs.size());

  const auto profiles = profiles_of(graphs, workers);
  std::vector<std::vector<BoundRecord>> per_graph(profiles.size());
  {
    const int w_count = std::max(1, workers);
    auto work = [&](int w) {
      for (std::size_t i = w; i < profiles.size(); i += w_count) per_graph[i] = suite_records(profiles[i], suite_id);
    };
    if (w_count == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (int w = 0; w < w_count; ++w) threads.emplace_back(work, w);
      for (auto& t : threads) t.join();
    }
  }
  if (suite_id == "all" || suite_id == "lemma9" || suite_id == "L9") {
    for (auto& [index, record] : lemma9_records(profiles)) per_graph[index].push_back(std::move(record));
  }
  const bool list_equalities = suite_id == "conj1" || suite_id == "conj2";
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    if (per_graph[i].empty()) continue;
    const std::string label = graph_label(profiles[i].graph);
    for (const auto& r : per_graph[i]) tally(report, label, r, list_equalities);
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

VerificationReport run_suite(const PopulationSpec& population, const std::string& suite_id, int workers) {
  const auto start = std::chrono::steady_clock::now();
  const auto graphs = materialize(population, workers);
  auto report = run_suite(graphs, suite_id, population.describe(), workers);
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

VerificationReport check_conjecture1(std::span<const Graph> graphs, const std::string& population_description) {
  return run_suite(graphs, "conj1", population_description);
}

VerificationReport check_conjecture2(std::span<const Graph> graphs, const std::string& population_description) {
  return run_suite(graphs, "conj2", population_description);
}

ExtremalResult extremal_search(int n, int m, int workers) {
  if (n < 1 || m < n - 1 || m > n * (n - 1) / 2) {
    throw InputError("no connected graph has n=" + std::to_string(n) + " and m=" + std::to_string(m));
  }
  const auto classes = enumerate({.n = n, .m = m, .connected_only = true}, workers);
  ExtremalResult out;
  out.n = n;
  out.m = m;
  out.classes = static_cast<long long>(classes.size());
  std::vector<std::pair<const ClassRep*, MeasureSet>> evaluated;
  for (const auto& rep : classes) evaluated.emplace_back(&rep, measure_set(rep.graph));
  out.max_s = evaluated.front().second.s;
  out.max_var = evaluated.front().second.var;
  for (const auto& [rep, ms] : evaluated) {
    out.max_s = std::max(out.max_s, ms.s);
    out.max_var = std::max(out.max_var, ms.var);
  }
  std::set<std::string> var_set;
  for (const auto& [rep, ms] : evaluated) {
    if (ms.s == out.max_s) out.max_s_graphs.push_back(rep->code.bytes);
    if (ms.var == out.max_var) {
      out.max_var_graphs.push_back(rep->code.bytes);
      var_set.insert(rep->code.bytes);
    }
  }
  out.coincide = std::all_of(out.max_s_graphs.begin(), out.max_s_graphs.end(),
                             [&](const std::string& code) { return var_set.contains(code); });
  return out;
}

UniversalCensus universal_census(int n, int m, int workers) {
  const auto classes = enumerate({.n = n, .m = m, .connected_only = true, .irregular_only = true}, workers);
  UniversalCensus out;
  out.n = n;
  out.m = m;
  out.irregular_classes = static_cast<long long>(classes.size());
  for (const auto& rep : classes) {
    const int q = degree_stats(rep.graph).universal_count;
    if (q == 0) continue;
    ++out.by_universal_count[q];
    out.graphs_by_universal_count[q].push_back(rep.code.bytes);
  }
  return out;
}

std::vector<int> split_k_rule(int n) {
  if (n < 4) throw InputError("split-k rule needs n >= 4");
  if (n % 3 == 0) return {n / 3};
  if ((n - 1) % 3 == 0) return {(n - 1) / 3};
  return {(n - 2) / 3, (n + 1) / 3};
}

int max_deviation_split_k(int n) { return split_k_rule(n).front(); }

std::vector<int> split_k_argmax(int n) {
  if (n < 2) throw InputError("complete split graphs need n >= 2");
  std::vector<int> best;
  Rational best_s = -1;
  for (int k = 1; k <= n - 1; ++k) {
    const Rational s = measure_set(complete_split(n, k)).s;
    if (s > best_s) {
      best_s = s;
      best = {k};
    } else if (s == best_s) {
      best.push_back(k);
    }
  }
  return best;
}

}  // namespace irreg
