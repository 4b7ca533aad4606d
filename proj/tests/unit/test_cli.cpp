#include "cli.hpp"

#include "irreg/canonical.hpp"
#include "irreg/generators.hpp"
#include "irreg/graph_io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace irreg;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("irreg_cli_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("compute renders the worked examples") {
  const auto gr = run({"compute"}, to_edge_list(named("grotzsch")));
  CHECK(gr.code == 0);
  CHECK(contains(gr.out, "two_walk: a=1 b=10"));
  CHECK(contains(gr.out, "Var=50/121"));
  CHECK(contains(gr.out, "c=10"));

  const auto k = run({"compute", "--g6", to_graph6(complete_multipartite(std::vector<int>{2, 3, 5}))});
  CHECK(contains(k.out, "S=12"));
  CHECK(contains(k.out, "Omega=13/100"));
  CHECK(contains(k.out, "IRD=60/7 (8.57143)"));

  const auto c5 = run({"compute"}, "Dhc\n");
  CHECK(contains(c5.out, "regular; S=0; Omega: undefined"));
}

TEST_CASE("compute formats") {
  const auto j = run({"compute", "--format", "json"}, "C~\n");
  CHECK(j.code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["n"] == 4);
  CHECK(parsed["measures"]["s"]["num"] == 0);

  const auto csv = run({"compute", "--format", "csv"}, "BW\nC~\n");
  CHECK(contains(csv.out, "graph,m1,s,var"));
  CHECK(contains(csv.out, "BW,6,4/3,2/9"));
}

TEST_CASE("compute rejects bad input") {
  CHECK(run({"compute"}, "C\n").code == 2);
  CHECK(run({"compute", "/nonexistent/file"}).code == 2);
  CHECK(run({"compute", "--format", "xml"}, "C~\n").code == 2);
}

TEST_CASE("gen") {
  auto g = run({"gen", "wheel", "6"});
  REQUIRE(g.code == 0);
  Graph w = from_graph6(g.out.substr(0, g.out.size() - 1));
  CHECK(w.order() == 6);
  CHECK(w.size() == 10);

  g = run({"gen", "cs", "7", "2"});
  w = from_graph6(g.out.substr(0, g.out.size() - 1));
  CHECK(w.size() == 11);

  g = run({"gen", "named", "diamond", "--format", "edges"});
  CHECK(g.out.substr(0, 4) == "4 5\n");

  g = run({"gen", "multipartite", "2", "3", "5"});
  CHECK(canonical_code(from_graph6(g.out.substr(0, g.out.size() - 1))) ==
        canonical_code(complete_multipartite(std::vector<int>{2, 3, 5})));

  CHECK(run({"gen", "wheel", "3"}).code == 2);
  CHECK(run({"gen", "wheel", "x"}).code == 2);
  CHECK(run({"gen", "petersen", "10"}).code == 2);
  CHECK(run({"gen"}).code == 2);
}

TEST_CASE("gen output round-trips through compute") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"gen", "path", "9"}, {"gen", "friendship", "3"}, {"gen", "named", "grotzsch"}}) {
    const auto g = run(args);
    const std::string line = g.out.substr(0, g.out.size() - 1);
    const auto c = run({"compute", "--format", "json"}, g.out);
    CHECK(nlohmann::json::parse(c.out)["graph6"] == line);
  }
}

TEST_CASE("enum") {
  CHECK(run({"enum", "--n", "6", "--m", "12", "--connected", "--irregular", "--count"}).out == "4\n");
  CHECK(run({"enum", "--trees", "--n", "4", "--count"}).out == "2\n");
  CHECK(run({"enum", "--n", "7", "--m", "11", "--connected", "--count"}).out == "138\n");
  const auto stream = run({"enum", "--n", "3"});
  CHECK(std::count(stream.out.begin(), stream.out.end(), '\n') == 4);
  CHECK(run({"enum", "--n", "9", "--count"}).code == 3);
  CHECK(run({"enum", "--n", "11", "--unicyclic"}).code == 3);
  CHECK(run({"enum", "--n", "5", "--trees", "--unicyclic"}).code == 2);
  CHECK(run({"enum"}).code == 2);
}

TEST_CASE("enum cache") {
  const auto dir = scratch_dir("cache");
  const auto first = run({"enum", "--n", "6", "--connected", "--cache-dir", dir.string()});
  const auto file = dir / "all-n6-connected.g6";
  REQUIRE(std::filesystem::exists(file));
  const auto second = run({"enum", "--n", "6", "--connected", "--cache-dir", dir.string()});
  CHECK(first.out == second.out);
  CHECK(std::count(first.out.begin(), first.out.end(), '\n') == 112);
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify") {
  const auto dir = scratch_dir("verify");
  const auto json_path = (dir / "report.json").string();
  const auto csv_path = (dir / "report.csv").string();
  const auto v = run({"verify", "--suite", "all", "--connected", "--max-n", "6", "--output", json_path, "--csv",
                      csv_path});
  CHECK(v.code == 0);
  CHECK(contains(v.out, "violations=0"));
  std::ifstream f(json_path);
  const auto report = nlohmann::json::parse(f);
  CHECK(report["suite_id"] == "all");
  CHECK(report["passed"] == true);
  CHECK_FALSE(report.contains("timings"));
  std::ifstream c(csv_path);
  std::string header;
  std::getline(c, header);
  CHECK(contains(header, "suite_id"));

  const auto again = run({"verify", "--suite", "all", "--connected", "--max-n", "6", "--output", json_path,
                          "--workers", "2"});
  std::ifstream f2(json_path);
  CHECK(nlohmann::json::parse(f2) == report);

  CHECK(run({"verify", "--suite", "bogus", "--max-n", "4"}).code == 2);
  CHECK(run({"verify", "--max-n", "9"}).code == 3);
  CHECK(run({"verify", "--trees", "--max-n", "10", "--suite", "trees"}).code == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("conjectures and extremal") {
  const auto c = run({"conjectures", "--max-n", "6", "--include-disconnected"});
  CHECK(c.code == 0);
  CHECK(contains(c.out, "suite=conj1 graphs=208"));
  CHECK(contains(c.out, "Conj2 equality cases: "));

  const auto e = run({"extremal", "--n", "7", "--m", "11"});
  CHECK(e.code == 0);
  CHECK(contains(e.out, "coincide: true; maximizer: CS(7,2)"));
  CHECK(run({"extremal", "--n", "7", "--m", "3"}).code == 2);
}

TEST_CASE("census and split parameter") {
  const auto c = run({"census", "--n", "7", "--m", "11"});
  CHECK(contains(c.out, "q=1: 14"));
  CHECK(contains(c.out, "q=2: 1"));
  CHECK(contains(c.out, "with universal vertices: 15"));
  CHECK(contains(run({"splitk", "12"}).out, "rule k: 4"));
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(contains(h.out, "compute"));
}
