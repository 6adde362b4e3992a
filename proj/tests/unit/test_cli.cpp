#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using genus::cli::run;

namespace {
struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "genus-cli-tests";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }
}  // namespace

TEST_CASE("genus subcommand") {
  auto k7 = call({"genus", "--gen", "complete:7"});
  CHECK(k7.code == 0);
  CHECK(k7.out == "genus=1\nfaces=14\n");
  CHECK(call({"genus", "--gen", "circulant:20:1,3,5"}).out == "genus=6\nfaces=30\n");
  CHECK(call({"genus", "--gen", "multipartite:2,2,2,2,2"}).out.rfind("genus=3\n", 0) == 0);
  auto budget = call({"genus", "--gen", "complete:7", "--max-nodes", "0"});
  CHECK(budget.code == 4);
  CHECK(budget.out.rfind("bracket lower=", 0) == 0);
  auto progress = call({"genus", "--gen", "complete:8", "--progress", "--progress-every", "1000"});
  CHECK(progress.err.find("PROGRESS dist=") != std::string::npos);
  CHECK(progress.err.find("target_F=18") != std::string::npos);
  CHECK(call({"genus", "--gen", "path:4", "--no-blocks"}).code == 4);
}

TEST_CASE("input errors exit 1") {
  CHECK(call({"genus"}).code == 1);
  CHECK(call({"genus", "--gen", "bogus:1"}).code == 1);
  CHECK(call({"genus", "--input", "/nonexistent/file"}).code == 1);
  CHECK(call({"genus", "--gen", "complete:4", "--input", "x"}).code == 1);
  CHECK(call({"frobnicate"}).code == 1);
  CHECK(call({}).code == 1);
  const auto bad = temp_file("bad.txt");
  write(bad, "0 1\n1 1\n");
  auto r = call({"genus", "--input", bad.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("error:") != std::string::npos);
  CHECK(call({"genus", "--gen", "complete:4", "--threads", "0"}).code == 1);
}

TEST_CASE("certificates round trip through verify") {
  const auto cert = temp_file("k33.cert");
  const auto graph = temp_file("k33.txt");
  write(graph, "0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n");
  auto g = call({"genus", "--input", graph.string(), "--emit-certificate", cert.string()});
  REQUIRE(g.code == 0);
  auto v = call({"verify", "--certificate", cert.string(), "--input", graph.string()});
  CHECK(v.code == 0);
  CHECK(v.out == "valid genus=1\n");
  CHECK(call({"verify", "--certificate", cert.string(), "--gen", "complete:6"}).code == 3);

  std::ifstream in(cert);
  std::stringstream text;
  text << in.rdbuf();
  std::string tampered = text.str();
  tampered.replace(tampered.find("genus 1"), 7, "genus 0");
  const auto bad = temp_file("k33-bad.cert");
  write(bad, tampered);
  auto vb = call({"verify", "--certificate", bad.string(), "--input", graph.string()});
  CHECK(vb.code == 2);
  CHECK(vb.out.find("genus-mismatch") != std::string::npos);

  write(bad, "PAGE-CERT v1\n");
  CHECK(call({"verify", "--certificate", bad.string(), "--input", graph.string()}).code == 1);
}

TEST_CASE("bounds subcommand") {
  auto r = call({"bounds", "--gen", "bipartite:3,3", "--budget-seconds", "10", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("k=0 lower=1 upper=2 elapsed=", 0) == 0);
  CHECK(r.out.find("genus=1\n") != std::string::npos);
  auto open = call({"bounds", "--gen", "complete:8", "--max-nodes", "0"});
  CHECK(open.code == 4);
}

TEST_CASE("cycles subcommand") {
  CHECK(call({"cycles", "--gen", "complete:4"}).out == "3 4\n4 3\n");
  CHECK(call({"cycles", "--gen", "petersen"}).out == "5 12\n6 10\n8 15\n9 20\n");
  auto list = call({"cycles", "--gen", "complete:4", "--list", "--length", "3"});
  CHECK(list.out == "0,1,2\n0,1,3\n0,2,3\n1,2,3\n");
}

TEST_CASE("distributions subcommand") {
  auto r = call({"distributions", "--gen", "bipartite:3,3"});
  CHECK(r.out.rfind("3×4 + 1×6 = 18 (4 faces, genus candidate 1)\n", 0) == 0);
  auto parity = call({"distributions", "--gen", "bipartite:3,3", "--euler-parity"});
  CHECK(parity.out.find("4 faces") == std::string::npos);
  CHECK(r.out.find("3×6 = 18 (3 faces, genus candidate 1)") != std::string::npos);
  auto k4 = call({"distributions", "--gen", "complete:4", "--limit", "1"});
  CHECK(k4.out == "4×3 = 12 (4 faces, genus candidate 0)\n");
}

TEST_CASE("oracle subcommand") {
  auto r = call({"oracle", "--gen", "complete:5", "--witness"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("genus=1\n", 0) == 0);
  CHECK(r.out.find("rot 0: ") != std::string::npos);
  CHECK(call({"oracle", "--gen", "complete:8", "--cap", "1000"}).code == 4);
}

TEST_CASE("bench subcommand") {
  auto empty = call({"bench"});
  CHECK(empty.code == 0);
  auto ok = call({"bench", "--case", "k5=complete:5@1", "--case", "petersen@1"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("k5") != std::string::npos);
  auto bad = call({"bench", "--case", "k5=complete:5@2"});
  CHECK(bad.code == 5);
  CHECK(bad.out.find("MISMATCH") != std::string::npos);
  auto dnf = call({"bench", "--case", "complete:8@2", "--max-nodes", "10"});
  CHECK(dnf.code == 0);
  CHECK(dnf.out.find("DNF") != std::string::npos);
  CHECK(call({"bench", "--suite", "nope"}).code == 1);
  auto cages = genus::cli::bench_suite("cages");
  REQUIRE(cages.size() == 6);
  CHECK(*cages[5].expected == 4);
  auto parsed = genus::cli::parse_bench_case("x=circulant:14:1,2,3,6@4");
  CHECK(parsed.label == "x");
  CHECK(parsed.spec == "circulant:14:1,2,3,6");
  CHECK(*parsed.expected == 4);
}

TEST_CASE("generate subcommand") {
  CHECK(call({"generate", "--gen", "petersen", "--format", "graph6"}).out == "IheA@GUAo\n");
  CHECK(call({"generate", "--gen", "cycle:3"}).out == "# n=3 m=3\n0 1\n0 2\n1 2\n");
}
