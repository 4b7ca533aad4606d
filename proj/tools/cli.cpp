#include "cli.hpp"

#include "irreg/canonical.hpp"
#include "irreg/enumeration.hpp"
#include "irreg/errors.hpp"
#include "irreg/generators.hpp"
#include "irreg/graph_io.hpp"
#include "irreg/measures.hpp"
#include "irreg/serialize.hpp"
#include "irreg/spectral.hpp"
#include "irreg/verifier.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace irreg::cli {

namespace {

constexpr const char* kCacheVersion = "irreg-cache-v1";

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string join_ints(const std::vector<int>& values, const std::string& sep) {
  std::vector<std::string> parts;
  for (int v : values) parts.push_back(std::to_string(v));
  return join(parts, sep);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << content;
}

// ---------------------------------------------------------------- compute

void render_table(const Graph& g, std::ostream& out) {
  const auto p = profile(g);
  const auto& st = p.stats;
  const auto& cls = p.cls;
  const auto& ms = p.measures;

  auto sorted = st.degrees;
  std::sort(sorted.rbegin(), sorted.rend());
  out << "graph: " << to_graph6(g) << '\n';
  out << "summary: " << (cls.is_regular ? "regular" : "irregular") << "; S=" << to_string(ms.s) << "; "
      << (ms.omega ? "Omega=" + to_string(*ms.omega) : std::string("Omega: undefined")) << '\n';
  out << "n=" << g.order() << " m=" << g.size() << '\n';
  out << "degrees: " << join_ints(sorted, " ") << '\n';
  out << "degree_set: {" << join_ints(st.degree_set, ", ") << "}\n";
  out << "histogram:";
  for (const auto& [deg, cnt] : st.histogram) out << " N_" << deg << '=' << cnt;
  out << '\n';
  out << "average_degree=" << to_display(st.average_degree) << '\n';
  out << "q=" << st.universal_count << '\n';
  if (cls.cyclomatic) out << "c=" << *cls.cyclomatic << '\n';

  std::vector<std::string> tags;
  tags.push_back(cls.is_regular ? "regular" : "irregular");
  tags.push_back(cls.is_connected ? "connected" : "disconnected");
  tags.push_back(std::to_string(cls.degree_class) + "-degreed");
  if (cls.is_bidegreed) tags.push_back("bidegreed");
  if (cls.is_balanced_bidegreed) tags.push_back("balanced");
  if (cls.is_dominating) tags.push_back("dominating");
  if (cls.is_tree) tags.push_back("tree");
  if (cls.is_unicyclic) tags.push_back("unicyclic");
  if (cls.complete_split_k) tags.push_back("complete split CS(" + std::to_string(g.order()) + "," +
                                           std::to_string(*cls.complete_split_k) + ")");
  out << "classification: " << join(tags, "; ") << '\n';

  out << "M1=" << to_display(ms.m1) << '\n';
  out << "S=" << to_display(ms.s) << '\n';
  out << "Var=" << to_display(ms.var) << '\n';
  out << "IRD=" << to_display(ms.ird) << '\n';
  out << "IRR=" << to_display(ms.irr) << '\n';
  if (ms.omega) {
    out << "Omega=" << to_display(*ms.omega) << '\n';
  } else {
    out << "Omega: undefined\n";
  }

  if (!cls.is_connected) {
    out << "two_walk: n/a (disconnected)\n";
  } else if (cls.is_regular) {
    out << "two_walk: n/a (regular)\n";
  } else {
    const auto det = detect_two_walk(g);
    if (det.params) {
      const auto [lambda, mu] = main_eigenvalues(*det.params);
      out << "two_walk: a=" << det.params->a << " b=" << det.params->b << std::setprecision(6) << " lambda=" << lambda
          << " mu=" << mu << '\n';
    } else {
      out << "two_walk: none (" << det.diagnostic << ")\n";
    }
  }

  out << "bounds:\n";
  for (const auto& r : bound_report(p)) {
    out << "  " << std::left << std::setw(6) << r.bound_id << ' ';
    if (!r.applicable) {
      out << "not applicable\n";
      continue;
    }
    out << to_string(r.lhs) << ' ' << to_string(r.relation) << ' ' << to_string(r.rhs) << "  "
        << (r.holds ? "holds" : "FAILS") << (r.is_equality ? ", equality" : "") << ", " << to_string(r.agreement)
        << '\n';
  }
}

Json compute_json(const Graph& g) {
  const auto p = profile(g);
  Json j;
  j["graph6"] = to_graph6(g);
  j["n"] = g.order();
  j["m"] = g.size();
  j["degree_stats"] = to_json(p.stats);
  j["classification"] = to_json(p.cls);
  j["measures"] = to_json(p.measures);
  if (p.cls.is_connected && !p.cls.is_regular) {
    const auto det = detect_two_walk(g);
    if (det.params) {
      j["two_walk"] = {{"a", det.params->a}, {"b", det.params->b}};
    } else {
      j["two_walk"] = nullptr;
    }
  }
  Json bounds = Json::array();
  for (const auto& r : bound_report(p)) bounds.push_back(to_json(r));
  j["bounds"] = bounds;
  return j;
}

std::vector<Graph> load_inputs(const std::vector<std::string>& inputs, const std::vector<std::string>& inline_g6,
                               std::istream& in) {
  std::vector<Graph> graphs;
  for (const auto& g6 : inline_g6) graphs.push_back(from_graph6(g6));
  for (const auto& path : inputs) {
    std::vector<Graph> loaded;
    if (path == "-") {
      loaded = read_graphs(in);
    } else {
      std::ifstream f(path);
      if (!f) throw InputError("cannot open '" + path + "'");
      loaded = read_graphs(f);
    }
    graphs.insert(graphs.end(), loaded.begin(), loaded.end());
  }
  if (graphs.empty()) graphs = read_graphs(in);
  return graphs;
}

// ---------------------------------------------------------------- gen

Graph generate(const std::vector<std::string>& words) {
  if (words.empty()) throw InputError("gen needs a family name");
  const std::string& family = words[0];
  auto num = [&](std::size_t i) {
    if (i >= words.size()) throw InputError("gen " + family + ": missing parameter");
    try {
      std::size_t used = 0;
      int v = std::stoi(words[i], &used);
      if (used != words[i].size()) throw InputError("");
      return v;
    } catch (...) {
      throw InputError("gen " + family + ": not an integer: '" + words[i] + "'");
    }
  };
  if (family == "path") return path(num(1));
  if (family == "cycle") return cycle(num(1));
  if (family == "star") return star(num(1));
  if (family == "complete") return complete(num(1));
  if (family == "wheel") return wheel(num(1));
  if (family == "friendship") return friendship(num(1));
  if (family == "cs" || family == "complete_split") return complete_split(num(1), num(2));
  if (family == "multipartite") {
    std::vector<int> parts;
    for (std::size_t i = 1; i < words.size(); ++i) parts.push_back(num(i));
    return complete_multipartite(parts);
  }
  if (family == "named") {
    if (words.size() < 2) throw InputError("gen named: missing name");
    return named(words[1]);
  }
  throw InputError("unknown family '" + family + "'");
}

// ---------------------------------------------------------------- enum

std::vector<ClassRep> cached_enumerate(const EnumerationSpec& spec, int workers, const std::string& cache_dir) {
  namespace fs = std::filesystem;
  if (cache_dir.empty()) return enumerate(spec, workers);
  const fs::path file = fs::path(cache_dir) / (spec.key() + ".g6");
  const std::string header = std::string("# ") + kCacheVersion + " " + spec.key();
  if (std::ifstream f(file); f) {
    std::string first;
    std::getline(f, first);
    if (first == header) {
      std::vector<ClassRep> out;
      std::string line;
      while (std::getline(f, line)) {
        if (line.empty()) continue;
        out.push_back({CanonicalCode{line}, from_graph6(line)});
      }
      return out;
    }
  }
  auto out = enumerate(spec, workers);
  std::error_code ec;
  fs::create_directories(cache_dir, ec);
  std::ofstream f(file);
  if (f) {
    f << header << '\n';
    for (const auto& rep : out) f << rep.code.bytes << '\n';
  }
  return out;
}

struct PopulationFlags {
  int min_n = 1;
  int max_n = 6;
  int m = -1;
  bool connected = false;
  bool irregular = false;
  bool trees = false;
  bool unicyclic = false;

  void add_to(CLI::App* app, bool with_connected = true) {
    app->add_option("--min-n", min_n, "smallest order");
    app->add_option("--max-n", max_n, "largest order");
    app->add_option("--m", m, "fixed edge count");
    if (with_connected) app->add_flag("--connected", connected, "connected graphs only");
    app->add_flag("--irregular", irregular, "irregular graphs only");
    app->add_flag("--trees", trees, "trees");
    app->add_flag("--unicyclic", unicyclic, "unicyclic graphs");
  }

  PopulationSpec spec() const {
    PopulationSpec p;
    p.min_n = min_n;
    p.max_n = max_n;
    if (m >= 0) p.m = m;
    p.connected_only = connected;
    p.irregular_only = irregular;
    if (trees && unicyclic) throw InputError("--trees and --unicyclic are exclusive");
    p.kind = trees ? PopulationKind::trees : unicyclic ? PopulationKind::unicyclic : PopulationKind::all;
    return p;
  }
};

void print_report_summary(const VerificationReport& r, std::ostream& out) {
  out << "suite=" << r.suite_id << " graphs=" << r.graphs_checked << " checks=" << r.checks_evaluated
      << " violations=" << r.violations.size() << " findings=" << r.findings.size();
  if (!r.equality_cases.empty()) out << " equality_cases=" << r.equality_cases.size();
  out << '\n';
  out << "population: " << r.population << '\n';
  for (const auto& v : r.violations) {
    out << "  VIOLATION " << v.check_id << " on " << v.graph << ": " << to_string(v.lhs) << ' '
        << to_string(v.relation) << ' ' << to_string(v.rhs) << " (" << v.reason << ")\n";
  }
  std::map<std::string, int> finding_counts;
  for (const auto& f : r.findings) ++finding_counts[f.check_id];
  for (const auto& [id, count] : finding_counts) out << "  finding " << id << ": " << count << " graphs\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact graph irregularity measures and verification suites", "irreg"};
  app.require_subcommand(1);

  // compute
  std::vector<std::string> compute_inputs;
  std::vector<std::string> compute_g6;
  std::string compute_format = "table";
  auto* compute = app.add_subcommand("compute", "measures, classification and bounds for each input graph");
  compute->add_option("inputs", compute_inputs, "files with graph6 lines or one edge list ('-' for stdin)");
  compute->add_option("--g6", compute_g6, "inline graph6 string");
  compute->add_option("--format", compute_format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  // gen
  std::vector<std::string> gen_words;
  std::string gen_format = "graph6";
  auto* gen = app.add_subcommand("gen", "emit a named family: path|cycle|star|complete|wheel N, cs N K, "
                                        "multipartite A B .., friendship K, named NAME");
  gen->add_option("family", gen_words, "family and parameters")->required();
  gen->add_option("--format", gen_format, "graph6 or edges")->check(CLI::IsMember({"graph6", "edges"}));

  // enum
  int enum_n = 0;
  int enum_m = -1;
  bool enum_connected = false, enum_irregular = false, enum_trees = false, enum_unicyclic = false, enum_count = false;
  int workers = 1;
  std::string cache_dir;
  if (const char* env = std::getenv("IRREG_CACHE_DIR")) cache_dir = env;
  auto* en = app.add_subcommand("enum", "stream isomorphism-class representatives as graph6");
  en->add_option("--n", enum_n, "vertex count")->required();
  en->add_option("--m", enum_m, "edge count");
  en->add_flag("--connected", enum_connected);
  en->add_flag("--irregular", enum_irregular);
  en->add_flag("--trees", enum_trees);
  en->add_flag("--unicyclic", enum_unicyclic);
  en->add_flag("--count", enum_count, "print the class count only");
  en->add_option("--workers", workers);
  en->add_option("--cache-dir", cache_dir, "cache directory (default: $IRREG_CACHE_DIR)");

  // verify
  PopulationFlags verify_pop;
  std::string suite = "all";
  std::string output, csv_output;
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "run a theorem suite over an enumerated population");
  verify->add_option("--suite", suite, "suite group or check id");
  verify_pop.add_to(verify);
  verify->add_option("--workers", workers);
  verify->add_option("--output", output, "JSON report path");
  verify->add_option("--csv", csv_output, "CSV summary path");
  verify->add_flag("--timings", timings, "include timings in the JSON report");

  // conjectures
  PopulationFlags conj_pop;
  bool include_disconnected = false;
  auto* conj = app.add_subcommand("conjectures", "scan for counterexamples to both conjectures");
  conj_pop.add_to(conj, false);
  conj->add_flag("--include-disconnected", include_disconnected, "scan disconnected graphs too");
  conj->add_option("--workers", workers);
  conj->add_option("--output", output, "JSON report path");
  conj->add_option("--csv", csv_output, "CSV summary path");
  conj->add_flag("--timings", timings);

  // extremal
  int ext_n = 0, ext_m = 0;
  auto* extremal = app.add_subcommand("extremal", "maximizers of S and Var over connected graphs with n, m fixed");
  extremal->add_option("--n", ext_n)->required();
  extremal->add_option("--m", ext_m)->required();
  extremal->add_option("--workers", workers);
  extremal->add_option("--output", output, "JSON result path");

  // census
  int census_n = 0, census_m = 0;
  auto* census = app.add_subcommand("census", "irregular connected classes with universal vertices");
  census->add_option("--n", census_n)->required();
  census->add_option("--m", census_m)->required();

  // splitk
  int splitk_n = 0;
  auto* splitk = app.add_subcommand("splitk", "complete split graph parameter maximizing S");
  splitk->add_option("n", splitk_n)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*compute) {
      const auto graphs = load_inputs(compute_inputs, compute_g6, in);
      if (compute_format == "json") {
        Json arr = Json::array();
        for (const auto& g : graphs) arr.push_back(compute_json(g));
        out << (arr.size() == 1 ? arr[0] : arr).dump(2) << '\n';
      } else if (compute_format == "csv") {
        out << csv_header_measures() << '\n';
        for (const auto& g : graphs) out << to_csv_row(to_graph6(g), measure_set(g)) << '\n';
      } else {
        for (std::size_t i = 0; i < graphs.size(); ++i) {
          if (i) out << '\n';
          render_table(graphs[i], out);
        }
      }
      return kOk;
    }
    if (*gen) {
      const Graph g = generate(gen_words);
      out << (gen_format == "edges" ? to_edge_list(g) : to_graph6(g) + "\n");
      return kOk;
    }
    if (*en) {
      if (enum_trees && enum_unicyclic) throw InputError("--trees and --unicyclic are exclusive");
      EnumerationSpec spec;
      spec.n = enum_n;
      if (enum_m >= 0) spec.m = enum_m;
      spec.connected_only = enum_connected;
      spec.irregular_only = enum_irregular;
      spec.population = enum_trees ? PopulationKind::trees
                        : enum_unicyclic ? PopulationKind::unicyclic
                                         : PopulationKind::all;
      const auto reps = cached_enumerate(spec, workers, cache_dir);
      if (enum_count) {
        out << reps.size() << '\n';
      } else {
        for (const auto& rep : reps) out << rep.code.bytes << '\n';
      }
      return kOk;
    }
    if (*verify) {
      const auto report = run_suite(verify_pop.spec(), suite, workers);
      print_report_summary(report, out);
      if (!output.empty()) write_file(output, to_json(report, timings).dump(2) + "\n");
      if (!csv_output.empty()) write_file(csv_output, csv_header_report() + "\n" + to_csv_row(report) + "\n");
      return report.passed() ? kOk : kViolations;
    }
    if (*conj) {
      auto spec = conj_pop.spec();
      spec.connected_only = !include_disconnected;
      const auto graphs = materialize(spec, workers);
      const auto c1 = check_conjecture1(graphs, spec.describe());
      const auto c2 = check_conjecture2(graphs, spec.describe());
      for (const auto* r : {&c1, &c2}) print_report_summary(*r, out);
      out << "Conj2 equality cases:";
      for (const auto& e : c2.equality_cases) out << ' ' << e.graph;
      out << '\n';
      if (!output.empty()) {
        Json j = Json::array({to_json(c1, timings), to_json(c2, timings)});
        write_file(output, j.dump(2) + "\n");
      }
      if (!csv_output.empty()) {
        write_file(csv_output, csv_header_report() + "\n" + to_csv_row(c1) + "\n" + to_csv_row(c2) + "\n");
      }
      return c1.passed() && c2.passed() ? kOk : kViolations;
    }
    if (*extremal) {
      const auto r = extremal_search(ext_n, ext_m, workers);
      std::vector<std::string> s_names, var_names;
      for (const auto& code : r.max_s_graphs) s_names.push_back(describe_graph(from_graph6(code)));
      for (const auto& code : r.max_var_graphs) var_names.push_back(describe_graph(from_graph6(code)));
      out << "n=" << r.n << " m=" << r.m << " classes=" << r.classes << '\n';
      out << "max S=" << to_display(r.max_s) << " attained by: " << join(s_names, ", ") << '\n';
      out << "max Var=" << to_display(r.max_var) << " attained by: " << join(var_names, ", ") << '\n';
      out << "coincide: " << (r.coincide ? "true" : "false");
      if (r.coincide && s_names.size() == 1) out << "; maximizer: " << s_names.front();
      out << '\n';
      if (!output.empty()) write_file(output, to_json(r).dump(2) + "\n");
      return kOk;
    }
    if (*census) {
      const auto c = universal_census(census_n, census_m);
      out << "irregular connected classes: " << c.irregular_classes << '\n';
      long long total = 0;
      for (const auto& [q, count] : c.by_universal_count) {
        out << "q=" << q << ": " << count << '\n';
        total += count;
      }
      out << "with universal vertices: " << total << '\n';
      return kOk;
    }
    if (*splitk) {
      out << "rule k: " << join_ints(split_k_rule(splitk_n), ", ") << '\n';
      out << "argmax k: " << join_ints(split_k_argmax(splitk_n), ", ") << '\n';
      return kOk;
    }
  } catch (const CapabilityError& e) {
    err << "capability error: " << e.what() << '\n';
    return kCapabilityError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "precondition error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace irreg::cli
