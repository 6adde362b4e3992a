// Acceptance run: one PASS/FAIL line per criterion, plus SKIP lines for the
// non-gating extended rows. Criteria 7 and 9 drive the genus tool as a
// separate process (--tool PATH).

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "genus/bounds.hpp"
#include "genus/certificate.hpp"
#include "genus/engine.hpp"
#include "genus/formulas.hpp"
#include "genus/generators.hpp"
#include "genus/oracle.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace genus;

namespace {

struct Case {
  std::string label;
  std::string spec;
  int expected;
  double limit_seconds;
};

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o) {
  std::cout << "criterion " << id << " " << (o.pass ? "PASS" : "FAIL") << "  " << title;
  if (!o.detail.empty()) std::cout << " | " << o.detail;
  std::cout << std::endl;
  if (!o.pass) ++failures;
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// Runs every case single-threaded under its time ceiling.
Outcome run_cases(const std::vector<Case>& cases) {
  Outcome o;
  double slowest = 0;
  std::string slowest_label;
  for (const Case& c : cases) {
    const Graph g = generate(c.spec);
    GenusOptions opts;
    opts.max_seconds = c.limit_seconds;
    const GenusResult r = compute_genus(g, opts);
    if (r.status != GenusStatus::Exact) {
      o.pass = false;
      o.detail += c.label + " did not finish (" + to_string(r.status) + ") ";
      continue;
    }
    if (r.genus != c.expected) {
      o.pass = false;
      o.detail += c.label + " gave " + std::to_string(r.genus) + " expected " + std::to_string(c.expected) + " ";
    }
    if (!verify_certificate(g, make_certificate(g, r.faces)).valid()) {
      o.pass = false;
      o.detail += c.label + " certificate invalid ";
    }
    if (r.seconds > slowest) {
      slowest = r.seconds;
      slowest_label = c.label;
    }
  }
  if (o.pass) {
    o.detail = std::to_string(cases.size()) + " cases, slowest " + slowest_label + " " + secs(slowest);
  }
  return o;
}

std::vector<Case> complete_cases() {
  std::vector<Case> out;
  for (int n = 3; n <= 8; ++n) {
    out.push_back({"K" + std::to_string(n), "complete:" + std::to_string(n),
                   static_cast<int>(genus_formula_complete(n)), 120});
  }
  return out;
}

std::vector<Case> bipartite_cases() {
  std::vector<Case> out;
  for (int a = 2; a <= 4; ++a) {
    for (int b = a; a + b <= 9; ++b) {
      out.push_back({"K" + std::to_string(a) + "," + std::to_string(b),
                     "bipartite:" + std::to_string(a) + "," + std::to_string(b),
                     static_cast<int>(genus_formula_complete_bipartite(a, b)), 120});
    }
  }
  return out;
}

std::vector<Case> cage_cases() {
  const int expected[] = {0, 1, 1, 1, 2, 4};
  std::vector<Case> out;
  for (int girth = 3; girth <= 8; ++girth) {
    out.push_back({"(3," + std::to_string(girth) + ")", "cage:" + std::to_string(girth), expected[girth - 3], 600});
  }
  return out;
}

std::vector<Case> cocktail_cases() {
  return {{"K2,2", "multipartite:2,2", 0, 600},
          {"K2,2,2", "multipartite:2,2,2", 0, 600},
          {"K2,2,2,2", "multipartite:2,2,2,2", 1, 600},
          {"K2,2,2,2,2", "multipartite:2,2,2,2,2", 3, 600}};
}

std::vector<Case> circulant_cases() {
  return {{"C14(1,2,3,6)", "circulant:14:1,2,3,6", 4, 3600},
          {"C18(1,3,9)", "circulant:18:1,3,9", 4, 3600},
          {"C20(1,3,5)", "circulant:20:1,3,5", 6, 3600},
          {"C20(1,6,9)", "circulant:20:1,6,9", 6, 3600}};
}

void extended_cages() {
  const bool enabled = std::getenv("GENUS_ACCEPTANCE_EXTENDED") != nullptr;
  std::cout << "extended (3,9) SKIP  no (3,9) cage fixture is shipped" << std::endl;
  const std::array<Case, 2> rows{{{"(3,10)", "cage:10", 9, 7200}, {"(3,12)", "cage:12", 17, 7200}}};
  for (const Case& c : rows) {
    if (!enabled) {
      std::cout << "extended " << c.label << " SKIP  set GENUS_ACCEPTANCE_EXTENDED=1 to run" << std::endl;
      continue;
    }
    const Outcome o = run_cases({c});
    std::cout << "extended " << c.label << " " << (o.pass ? "PASS" : "MISS") << "  " << o.detail
              << " (non-gating)" << std::endl;
  }
}

std::vector<Graph> random_suite() {
  std::mt19937_64 rng(0x5eed);
  std::vector<Graph> out;
  for (int i = 0; i < 200; ++i) out.push_back(testing::random_connected(rng, 8, 4));
  return out;
}

Outcome oracle_equivalence() {
  Outcome o;
  int checked = 0;
  auto compare = [&](const Graph& g) {
    ++checked;
    const int truth = brute_force_genus(g).genus;
    const GenusResult r = compute_genus(g);
    if (r.status != GenusStatus::Exact || r.genus != truth) {
      o.pass = false;
      o.detail += encode_graph6(g) + ": engine " +
                  (r.status == GenusStatus::Exact ? std::to_string(r.genus) : to_string(r.status)) +
                  " oracle " + std::to_string(truth) + "; ";
    }
  };
  const auto census = testing::census();
  for (const Graph& g : census) compare(g);
  for (const Graph& g : random_suite()) compare(g);
  if (o.pass) {
    o.detail = std::to_string(census.size()) + " census + 200 random graphs, 0 mismatches";
  }
  return o;
}

// Runs the tool, capturing stdout; returns the exit status.
int shell(const std::string& command, std::string* out = nullptr) {
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) return -1;
  std::string text;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) text.append(buf.data(), got);
  const int status = pclose(pipe);
  if (out) *out = std::move(text);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> gating_specs() {
  std::vector<std::string> out;
  for (const auto& list : {complete_cases(), bipartite_cases(), cage_cases(), cocktail_cases(), circulant_cases()}) {
    for (const Case& c : list) out.push_back(c.spec);
  }
  return out;
}

Outcome certificate_round_trip(const std::string& tool, const fs::path& dir) {
  Outcome o;
  std::vector<std::pair<Graph, EmbeddingCertificate>> certs;
  for (const std::string& spec : gating_specs()) {
    const fs::path cert = dir / (std::to_string(certs.size()) + ".cert");
    const std::string emit = tool + " genus --gen " + spec + " --emit-certificate " + cert.string();
    const std::string verify = tool + " verify --gen " + spec + " --certificate " + cert.string();
    if (shell(emit) != 0 || shell(verify) != 0) {
      o.pass = false;
      o.detail += spec + " certificate not accepted; ";
      continue;
    }
    certs.emplace_back(generate(spec), deserialize(read_file(cert)));
  }
  if (certs.empty()) return {false, "no certificates produced"};

  std::mt19937_64 rng(7);
  int rejected = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto& [g, original] = certs[rng() % certs.size()];
    EmbeddingCertificate cert = original;
    ViolationKind expected;
    switch (rng() % 3) {
      case 0: {
        auto& face = cert.faces[rng() % cert.faces.size()];
        std::reverse(face.begin(), face.end());
        expected = ViolationKind::DirectedEdgeCount;
        break;
      }
      case 1:
        cert.faces.erase(cert.faces.begin() + static_cast<long>(rng() % cert.faces.size()));
        expected = ViolationKind::DirectedEdgeCount;
        break;
      default: {
        const int deltas[] = {-2, -1, 1, 2, 3};
        cert.claimed_genus += deltas[rng() % 5];
        expected = ViolationKind::GenusMismatch;
        break;
      }
    }
    const VerificationReport r = verify_certificate(g, cert);
    if (!r.valid() && r.has(expected)) {
      ++rejected;
    } else if (o.pass) {
      o.pass = false;
      o.detail += std::string("mutation ") + std::to_string(i) + " not rejected as " + to_string(expected) + "; ";
    }
  }
  if (rejected != 1000) o.pass = false;
  o.detail = std::to_string(certs.size()) + " emitted certificates verified by a separate process, " +
             std::to_string(rejected) + "/1000 mutations rejected with the expected category" +
             (o.detail.empty() || o.pass ? "" : "; " + o.detail);
  return o;
}

Outcome bounds_soundness() {
  Outcome o;
  const InitialBounds k33 = initial_bounds(complete_bipartite(3, 3));
  if (k33.lower != 1 || k33.upper != 2) {
    o.pass = false;
    o.detail += "K3,3 initial bounds (" + std::to_string(k33.lower) + ", " + std::to_string(k33.upper) + "); ";
  }
  int steps = 0;
  const auto census = testing::census();
  for (const Graph& g : census) {
    const int truth = brute_force_genus(g).genus;
    BoundsRefiner refiner(g, 11);
    RefineLimits limits;
    limits.heuristic_tries = 1;
    limits.max_nodes = 50;  // small steps so brackets move gradually
    for (int i = 0; i < 500 && !(refiner.state().closed() && refiner.state().certificate); ++i) {
      refiner.refine(limits);
    }
    const auto& h = refiner.state().history;
    steps += static_cast<int>(h.size());
    bool ok = refiner.state().lower == truth && refiner.state().upper == truth &&
              refiner.state().certificate && verify_certificate(g, *refiner.state().certificate).valid();
    for (std::size_t i = 0; i < h.size(); ++i) {
      ok = ok && h[i].lower <= truth && truth <= h[i].upper;
      if (i) ok = ok && h[i].lower >= h[i - 1].lower && h[i].upper <= h[i - 1].upper;
    }
    if (!ok) {
      o.pass = false;
      o.detail += encode_graph6(g) + " bracket unsound or not closed; ";
    }
  }
  if (o.pass) {
    o.detail = "K3,3 starts at (1, 2); " + std::to_string(census.size()) + " census graphs, " +
               std::to_string(steps) + " bracket states, all sound, monotone and closed at the oracle genus";
  }
  return o;
}

Outcome determinism(const std::string& tool, const fs::path& dir) {
  Outcome o;
  int runs = 0;
  for (const std::string& spec : gating_specs()) {
    std::string first;
    std::string second;
    const fs::path c1 = dir / "a.cert";
    const fs::path c2 = dir / "b.cert";
    const std::string base = tool + " genus --threads 1 --seed 1 --gen " + spec + " --emit-certificate ";
    shell(base + c1.string(), &first);
    shell(base + c2.string(), &second);
    runs += 2;
    if (first.empty() || first != second || read_file(c1) != read_file(c2)) {
      o.pass = false;
      o.detail += spec + " differs; ";
    }
  }
  for (const std::string& cmd : {std::string(" bounds --gen bipartite:3,3 --seed 1"),
                                 std::string(" oracle --gen petersen --witness"),
                                 std::string(" cycles --gen cage:6"),
                                 std::string(" distributions --gen complete:6 --limit 50")}) {
    std::string first;
    std::string second;
    shell(tool + cmd, &first);
    shell(tool + cmd, &second);
    runs += 2;
    // bounds lines carry wall-clock times; compare everything else
    auto strip = [](std::string s) {
      std::string out;
      std::istringstream in(s);
      for (std::string line; std::getline(in, line);) out += line.substr(0, line.find(" elapsed=")) + "\n";
      return out;
    };
    if (first.empty() || strip(first) != strip(second)) {
      o.pass = false;
      o.detail += cmd + " differs; ";
    }
  }
  if (o.pass) o.detail = std::to_string(runs) + " invocations, stdout and certificates byte-identical in pairs";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string tool;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--tool") tool = argv[i + 1];
  }
  if (tool.empty()) {
    std::cerr << "usage: acceptance --tool PATH_TO_GENUS\n";
    return 2;
  }
  const fs::path dir = fs::temp_directory_path() / ("genus-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);

  report(1, "complete graphs K3..K8 match ceil((n-3)(n-4)/12) within 120 s", run_cases(complete_cases()));
  report(2, "complete bipartite K(a,b), 2<=a<=b, a+b<=9, match ceil((a-2)(b-2)/4) within 120 s",
         run_cases(bipartite_cases()));
  report(3, "cubic cages (3,3)..(3,8) give 0,1,1,1,2,4 within 10 min", run_cases(cage_cases()));
  extended_cages();
  report(4, "cocktail-party graphs K2,2..K2,2,2,2,2 give 0,0,1,3 within 10 min", run_cases(cocktail_cases()));
  report(5, "circulants C14(1,2,3,6), C18(1,3,9), C20(1,3,5), C20(1,6,9) give 4,4,6,6 within 1 h",
         run_cases(circulant_cases()));
  report(6, "engine equals brute-force oracle on the census and 200 random graphs", oracle_equivalence());
  report(7, "emitted certificates verify; 1000 mutations rejected", certificate_round_trip(tool, dir));
  report(8, "bounds sound and monotone on the census; K3,3 initial (1, 2)", bounds_soundness());
  report(9, "single-threaded fixed-seed runs are byte-identical", determinism(tool, dir));

  fs::remove_all(dir);
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
