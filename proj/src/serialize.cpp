#include "irreg/serialize.hpp"

#include <limits>
#include <sstream>

namespace irreg {

namespace {

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return v.convert_to<long long>();
  }
  return v.str();
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

Json to_json(const Rational& r) {
  Json j;
  j["num"] = big_to_json(numerator_of(r));
  j["den"] = big_to_json(denominator_of(r));
  j["decimal"] = to_decimal(r, 12);
  return j;
}

Json to_json(const MeasureSet& ms) {
  Json j;
  j["m1"] = to_json(ms.m1);
  j["s"] = to_json(ms.s);
  j["var"] = to_json(ms.var);
  j["ird"] = to_json(ms.ird);
  j["irr"] = to_json(ms.irr);
  j["omega"] = ms.omega ? to_json(*ms.omega) : Json(nullptr);
  return j;
}

Json to_json(const BoundRecord& r) {
  Json j;
  j["bound_id"] = r.bound_id;
  j["relation"] = to_string(r.relation);
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  j["applicable"] = r.applicable;
  j["holds"] = r.holds;
  j["is_equality"] = r.is_equality;
  j["predicted_equality"] = r.predicted_equality;
  j["agreement"] = to_string(r.agreement);
  return j;
}

Json to_json(const DegreeStats& st) {
  Json j;
  j["degrees"] = st.degrees;
  Json hist = Json::object();
  for (const auto& [deg, cnt] : st.histogram) hist[std::to_string(deg)] = cnt;
  j["histogram"] = hist;
  j["max_degree"] = st.max_degree;
  j["min_degree"] = st.min_degree;
  j["edge_count"] = st.edge_count;
  j["average_degree"] = to_json(st.average_degree);
  j["degree_set"] = st.degree_set;
  j["universal_count"] = st.universal_count;
  return j;
}

Json to_json(const Classification& c) {
  Json j;
  j["is_connected"] = c.is_connected;
  j["is_regular"] = c.is_regular;
  j["degree_class"] = c.degree_class;
  j["is_bidegreed"] = c.is_bidegreed;
  j["is_balanced_bidegreed"] = c.is_balanced_bidegreed;
  j["is_dominating"] = c.is_dominating;
  j["is_tree"] = c.is_tree;
  j["is_unicyclic"] = c.is_unicyclic;
  j["cyclomatic"] = c.cyclomatic ? Json(*c.cyclomatic) : Json(nullptr);
  j["complete_split_k"] = c.complete_split_k ? Json(*c.complete_split_k) : Json(nullptr);
  return j;
}

Json to_json(const VerificationReport& report, bool include_timings) {
  Json j;
  j["suite_id"] = report.suite_id;
  j["population"] = report.population;
  j["counts"] = {{"graphs_checked", report.graphs_checked},
                 {"checks_evaluated", report.checks_evaluated},
                 {"violations", report.violations.size()},
                 {"findings", report.findings.size()},
                 {"equality_cases", report.equality_cases.size()}};
  j["passed"] = report.passed();
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"graph", v.graph},
                          {"check_id", v.check_id},
                          {"relation", to_string(v.relation)},
                          {"lhs", to_json(v.lhs)},
                          {"rhs", to_json(v.rhs)},
                          {"reason", v.reason}});
  }
  j["violations"] = violations;
  Json findings = Json::array();
  for (const auto& f : report.findings) {
    findings.push_back({{"graph", f.graph},
                        {"check_id", f.check_id},
                        {"observed_equality", f.observed_equality},
                        {"predicted_equality", f.predicted_equality}});
  }
  j["findings"] = findings;
  Json equalities = Json::array();
  for (const auto& e : report.equality_cases) equalities.push_back({{"graph", e.graph}, {"check_id", e.check_id}});
  j["equality_cases"] = equalities;
  if (include_timings) j["timings"] = {{"elapsed_ms", report.elapsed.count()}};
  return j;
}

Json to_json(const ExtremalResult& r) {
  Json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["classes"] = r.classes;
  j["max_s"] = to_json(r.max_s);
  j["max_var"] = to_json(r.max_var);
  j["max_s_graphs"] = r.max_s_graphs;
  j["max_var_graphs"] = r.max_var_graphs;
  j["coincide"] = r.coincide;
  return j;
}

Json to_json(const UniversalCensus& c) {
  Json j;
  j["n"] = c.n;
  j["m"] = c.m;
  j["irregular_classes"] = c.irregular_classes;
  Json by_q = Json::object();
  for (const auto& [q, count] : c.by_universal_count) by_q[std::to_string(q)] = count;
  j["by_universal_count"] = by_q;
  Json graphs = Json::object();
  for (const auto& [q, codes] : c.graphs_by_universal_count) graphs[std::to_string(q)] = codes;
  j["graphs"] = graphs;
  return j;
}

std::string csv_header_measures() { return "graph,m1,s,var,ird,irr,omega"; }

std::string to_csv_row(const std::string& label, const MeasureSet& ms) {
  std::ostringstream os;
  os << csv_escape(label) << ',' << to_string(ms.m1) << ',' << to_string(ms.s) << ','
     << to_string(ms.var) << ',' << to_string(ms.ird) << ',' << to_string(ms.irr) << ','
     << (ms.omega ? to_string(*ms.omega) : std::string());
  return os.str();
}

std::string csv_header_bounds() { return "graph,bound_id,relation,lhs,rhs,applicable,holds,is_equality,predicted_equality,agreement"; }

std::string to_csv_row(const std::string& label, const BoundRecord& r) {
  std::ostringstream os;
  os << csv_escape(label) << ',' << r.bound_id << ',' << to_string(r.relation) << ',' << to_string(r.lhs) << ','
     << to_string(r.rhs) << ',' << r.applicable << ',' << r.holds << ',' << r.is_equality << ','
     << r.predicted_equality << ',' << to_string(r.agreement);
  return os.str();
}

std::string csv_header_report() { return "suite_id,population,graphs_checked,checks_evaluated,violations,findings"; }

std::string to_csv_row(const VerificationReport& report) {
  std::ostringstream os;
  os << csv_escape(report.suite_id) << ',' << csv_escape(report.population) << ',' << report.graphs_checked << ','
     << report.checks_evaluated << ',' << report.violations.size() << ',' << report.findings.size();
  return os.str();
}

}  // namespace irreg
