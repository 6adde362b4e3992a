#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <mutex>
#include <sstream>

#include <CLI11.hpp>

#include "genus/bounds.hpp"
#include "genus/certificate.hpp"
#include "genus/cycles.hpp"
#include "genus/distribution.hpp"
#include "genus/engine.hpp"
#include "genus/formulas.hpp"
#include "genus/generators.hpp"
#include "genus/graph_io.hpp"
#include "genus/oracle.hpp"

namespace genus::cli {

namespace {

struct Common {
  std::string input;
  std::string gen;
  std::string format = "edges";
  int threads = 1;
  std::optional<double> max_seconds;
  std::optional<std::uint64_t> max_nodes;
  std::uint64_t seed = 1;
  std::string certificate_out;
  bool progress = false;
  std::uint64_t progress_every = 100'000;

  std::optional<double> seconds() const { return max_seconds; }
  std::optional<std::uint64_t> nodes() const { return max_nodes; }
  GraphFormat graph_format() const {
    return format == "graph6" ? GraphFormat::Graph6 : GraphFormat::EdgeList;
  }
};

void add_common(CLI::App* sub, Common& c, const std::string& seconds_names = "--max-seconds") {
  auto* input = sub->add_option("--input", c.input, "graph file ('-' for stdin)");
  auto* gen = sub->add_option("--gen", c.gen, "generator, e.g. complete:7 or circulant:14:1,2,3,6");
  input->excludes(gen);
  sub->add_option("--format", c.format, "input/output format")
      ->check(CLI::IsMember({"edges", "graph6"}));
  sub->add_option("--threads", c.threads, "search workers")->check(CLI::PositiveNumber);
  sub->add_option(seconds_names, c.max_seconds, "wall-clock budget")->check(CLI::NonNegativeNumber);
  sub->add_option("--max-nodes", c.max_nodes, "search node budget");
  sub->add_option("--seed", c.seed, "random seed");
  sub->add_option("--emit-certificate", c.certificate_out, "write an embedding certificate");
  sub->add_flag("--progress", c.progress, "print PROGRESS lines to stderr");
  sub->add_option("--progress-every", c.progress_every, "search nodes between PROGRESS lines")
      ->check(CLI::PositiveNumber);
}

Graph load(const Common& c) {
  if (!c.gen.empty()) return generate(c.gen);
  if (c.input.empty()) {
    throw InputError(InputErrorKind::InvalidParameters, "no graph given: pass --input PATH or --gen SPEC");
  }
  if (c.input == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_graph(text, c.graph_format());
  }
  return load_graph_file(c.input, c.graph_format());
}

void write_certificate(const std::string& path, const EmbeddingCertificate& cert) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError(InputErrorKind::InvalidParameters, "cannot write certificate: " + path);
  f << serialize(cert);
}

std::string fixed(double x, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

int cmd_genus(const Common& c, bool no_blocks, std::ostream& out, std::ostream& err) {
  const Graph g = load(c);
  GenusOptions options;
  options.max_seconds = c.seconds();
  options.max_nodes = c.nodes();
  options.search.threads = c.threads;
  options.split_blocks = !no_blocks;
  std::mutex progress_mutex;
  if (c.progress) {
    options.progress_every = c.progress_every;
    options.on_progress = [&](const EngineProgress& p) {
      std::lock_guard lock(progress_mutex);
      err << "PROGRESS dist=" << p.distributions << " target_F=" << p.target_faces
          << " nodes=" << p.nodes << std::endl;
    };
  }
  GenusResult r;
  try {
    r = compute_genus(g, options);
  } catch (const CapacityExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetExhausted;
  }
  err << "blocks=" << r.blocks << " distributions=" << r.distributions << " nodes=" << r.nodes
      << " seconds=" << fixed(r.seconds) << "\n";
  switch (r.status) {
    case GenusStatus::Exact: {
      const int faces = g.edge_count() == 0 ? 1 : static_cast<int>(r.faces.size());
      out << "genus=" << r.genus << "\n";
      out << "faces=" << faces << "\n";
      if (!c.certificate_out.empty()) write_certificate(c.certificate_out, make_certificate(g, r.faces));
      return kOk;
    }
    case GenusStatus::BudgetExceeded:
      out << "bracket lower=" << r.lower << " upper=" << r.upper << "\n";
      err << "budget exhausted before the genus was determined\n";
      return kBudgetExhausted;
    case GenusStatus::NoCycleFaceSet:
      err << "no face count admits a facial set of simple cycles; this graph has no embedding "
             "whose faces are all simple cycles (run without --no-blocks)\n";
      return kBudgetExhausted;
  }
  return kOk;
}

int cmd_bounds(const Common& c, std::ostream& out, std::ostream& err) {
  const Graph g = load(c);
  BoundsRefiner refiner(g, c.seed);
  const InitialBounds& ib = refiner.initial();
  err << "# initial lower bounds: girth=" << ib.girth_lower << " literal=" << ib.literal_lower
      << " (literal bound not trusted)\n";
  const std::optional<double> total = c.seconds();
  auto print = [&](const BoundsStep& s) {
    out << "k=" << s.iteration << " lower=" << s.lower << " upper=" << s.upper
        << " elapsed=" << fixed(s.elapsed_seconds) << "\n";
  };
  print(refiner.state().history.back());
  int last_lower = refiner.state().lower;
  int last_upper = refiner.state().upper;
  double spent = 0;
  RefineLimits limits;
  limits.max_nodes = c.nodes();
  limits.search.threads = c.threads;
  while (!(refiner.state().closed() && refiner.state().certificate)) {
    if (total) {
      if (spent >= *total) break;
      limits.max_seconds = *total - spent;
    }
    const BoundsState& s = refiner.refine(limits);
    spent = s.history.back().elapsed_seconds;
    if (s.lower != last_lower || s.upper != last_upper) {
      print(s.history.back());
      last_lower = s.lower;
      last_upper = s.upper;
    }
    // A node budget applies per step; without a clock there is nothing to
    // wait for once a step makes no progress.
    if (!total && c.nodes() && s.history.size() >= 2) {
      const auto& prev = s.history[s.history.size() - 2];
      if (prev.lower == s.lower && prev.upper == s.upper && !s.closed()) break;
    }
  }
  const BoundsState& s = refiner.state();
  if (s.closed()) {
    out << "genus=" << s.lower << "\n";
    if (!c.certificate_out.empty() && s.certificate) write_certificate(c.certificate_out, *s.certificate);
    return kOk;
  }
  err << "budget expired with open bracket [" << s.lower << ", " << s.upper << "]\n";
  return kBudgetExhausted;
}

int cmd_verify(const Common& c, const std::string& cert_path, std::ostream& out, std::ostream& err) {
  const Graph g = load(c);
  std::ifstream f(cert_path, std::ios::binary);
  if (!f) throw InputError(InputErrorKind::InvalidParameters, "cannot open certificate: " + cert_path);
  std::stringstream text;
  text << f.rdbuf();
  EmbeddingCertificate cert;
  try {
    cert = deserialize(text.str());
  } catch (const MalformedCertificate& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  VerificationReport report;
  try {
    report = verify_certificate(g, cert);
  } catch (const FingerprintMismatch& e) {
    out << "fingerprint-mismatch: " << e.what() << "\n";
    return kFingerprintMismatch;
  }
  if (report.valid()) {
    out << "valid genus=" << cert.claimed_genus << "\n";
    return kOk;
  }
  for (const auto& v : report.violations) out << to_string(v.kind) << ": " << v.detail << "\n";
  return kViolation;
}

std::string join(const std::vector<Vertex>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

int cmd_cycles(const Common& c, bool list, int only_length, std::ostream& out) {
  const Graph g = load(c);
  if (only_length > 0) {
    if (list) {
      for (const auto& cyc : find_cycles_of_length(g, only_length)) out << join(cyc.vertices) << "\n";
    } else {
      out << only_length << " " << count_cycles_of_length(g, only_length) << "\n";
    }
    return kOk;
  }
  const auto counts = count_cycles_by_length(g);
  for (const auto& [k, count] : counts) {
    if (list) {
      for (const auto& cyc : find_cycles_of_length(g, k)) out << join(cyc.vertices) << "\n";
    } else {
      out << k << " " << count << "\n";
    }
  }
  return kOk;
}

int cmd_distributions(const Common& c, int only_faces, std::int64_t limit, bool euler_only,
                      std::ostream& out) {
  const Graph g = load(c);
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const int girth = g.girth();
  if (girth == 0) return kOk;
  const auto population = population_from_counts(count_cycles_by_length(g));
  const int top = std::min(2 * m / girth, m - n + 2);
  std::int64_t printed = 0;
  for (int faces = top; faces >= 1; --faces) {
    if (euler_only && (n - m + faces) % 2 != 0) continue;
    if (only_faces > 0 && faces != only_faces) continue;
    const int genus = genus_from_face_count(n, m, faces);
    const bool more = generate_distributions_with_faces(
        population, 2 * m, faces, [&](const CycleDistribution& d) {
          if (limit >= 0 && printed >= limit) return false;
          std::string line;
          for (const auto& [length, count] : d.parts) {
            if (!line.empty()) line += " + ";
            line += std::to_string(count) + "×" + std::to_string(length);
          }
          out << line << " = " << 2 * m << " (" << faces << " faces, genus candidate " << genus << ")\n";
          ++printed;
          return true;
        });
    if (!more) break;
  }
  return kOk;
}

int cmd_oracle(const Common& c, double cap, bool witness, std::ostream& out, std::ostream& err) {
  const Graph g = load(c);
  OracleOptions options;
  options.cap = cap;
  OracleResult r;
  try {
    r = brute_force_genus(g, options);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetExhausted;
  }
  err << "rotations=" << r.rotations_tried << "\n";
  out << "genus=" << r.genus << "\n";
  if (witness) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      std::vector<Vertex> cyc;
      for (int slot : r.witness.order[v]) cyc.push_back(g.neighbors(v)[slot].neighbor);
      out << "rot " << v << ": " << join(cyc) << "\n";
    }
  }
  if (!c.certificate_out.empty()) {
    write_certificate(c.certificate_out, make_certificate(g, trace_faces(g, r.witness)));
  }
  return kOk;
}

int cmd_bench(const Common& c, const std::vector<std::string>& suites,
              const std::vector<std::string>& cases, std::ostream& out, std::ostream& err) {
  std::vector<BenchCase> all;
  for (const auto& s : suites) {
    auto suite = bench_suite(s);
    all.insert(all.end(), suite.begin(), suite.end());
  }
  for (const auto& text : cases) all.push_back(parse_bench_case(text));

  char line[256];
  std::snprintf(line, sizeof line, "%-28s %6s %7s %6s %8s %10s  %s\n", "case", "n", "m", "genus",
                "expected", "seconds", "status");
  out << line;
  bool mismatch = false;
  for (const auto& bc : all) {
    Graph g = bc.spec.rfind("file:", 0) == 0 ? load_graph_file(bc.spec.substr(5), c.graph_format())
                                             : generate(bc.spec);
    GenusOptions options;
    options.max_seconds = c.seconds();
    options.max_nodes = c.nodes();
    options.search.threads = c.threads;
    GenusResult r = compute_genus(g, options);
    std::string genus = "-";
    std::string status = "ok";
    if (r.status == GenusStatus::Exact) {
      genus = std::to_string(r.genus);
      if (bc.expected && *bc.expected != r.genus) {
        status = "MISMATCH";
        mismatch = true;
      }
    } else {
      status = r.status == GenusStatus::BudgetExceeded ? "DNF" : "NO-CYCLE-FACES";
    }
    const std::string expected = bc.expected ? std::to_string(*bc.expected) : "-";
    std::snprintf(line, sizeof line, "%-28s %6d %7d %6s %8s %10s  %s\n", bc.label.c_str(),
                  g.vertex_count(), g.edge_count(), genus.c_str(), expected.c_str(),
                  r.status == GenusStatus::Exact ? fixed(r.seconds).c_str() : "DNF", status.c_str());
    out << line << std::flush;
  }
  if (mismatch) err << "benchmark genus mismatch\n";
  return mismatch ? kBenchMismatch : kOk;
}

int cmd_generate(const Common& c, std::ostream& out) {
  const Graph g = load(c);
  if (c.graph_format() == GraphFormat::Graph6) {
    out << encode_graph6(g) << "\n";
  } else {
    out << write_edge_list(g);
  }
  return kOk;
}

}  // namespace

std::vector<std::string> bench_suite_names() {
  return {"complete", "bipartite", "cages", "cages-extended", "cocktail", "circulant", "gating"};
}

std::vector<BenchCase> bench_suite(const std::string& name) {
  std::vector<BenchCase> out;
  if (name == "complete" || name == "gating") {
    for (int n = 3; n <= 8; ++n) {
      out.push_back({"K" + std::to_string(n), "complete:" + std::to_string(n),
                     static_cast<int>(genus_formula_complete(n))});
    }
  }
  if (name == "bipartite" || name == "gating") {
    for (int a = 2; a <= 4; ++a) {
      for (int b = a; a + b <= 9; ++b) {
        out.push_back({"K" + std::to_string(a) + "," + std::to_string(b),
                       "bipartite:" + std::to_string(a) + "," + std::to_string(b),
                       static_cast<int>(genus_formula_complete_bipartite(a, b))});
      }
    }
  }
  if (name == "cages" || name == "gating") {
    const int expected[] = {0, 1, 1, 1, 2, 4};
    for (int girth = 3; girth <= 8; ++girth) {
      out.push_back({"cage(3," + std::to_string(girth) + ")", "cage:" + std::to_string(girth),
                     expected[girth - 3]});
    }
  }
  if (name == "cages-extended") {
    out.push_back({"cage(3,10)", "cage:10", 9});
    out.push_back({"cage(3,12)", "cage:12", 17});
  }
  if (name == "cocktail" || name == "gating") {
    out.push_back({"K2,2", "multipartite:2,2", 0});
    out.push_back({"K2,2,2", "multipartite:2,2,2", 0});
    out.push_back({"K2,2,2,2", "multipartite:2,2,2,2", 1});
    out.push_back({"K2,2,2,2,2", "multipartite:2,2,2,2,2", 3});
  }
  if (name == "circulant" || name == "gating") {
    out.push_back({"C14(1,2,3,6)", "circulant:14:1,2,3,6", 4});
    out.push_back({"C18(1,3,9)", "circulant:18:1,3,9", 4});
    out.push_back({"C20(1,3,5)", "circulant:20:1,3,5", 6});
    out.push_back({"C20(1,6,9)", "circulant:20:1,6,9", 6});
  }
  if (out.empty()) {
    const auto names = bench_suite_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw InputError(InputErrorKind::InvalidParameters, "unknown bench suite: " + name);
    }
  }
  return out;
}

BenchCase parse_bench_case(const std::string& text) {
  BenchCase bc;
  std::string rest = text;
  if (auto eq = rest.find('='); eq != std::string::npos) {
    bc.label = rest.substr(0, eq);
    rest = rest.substr(eq + 1);
  }
  if (auto at = rest.rfind('@'); at != std::string::npos) {
    const std::string number = rest.substr(at + 1);
    try {
      std::size_t used = 0;
      bc.expected = std::stoi(number, &used);
      if (used != number.size()) throw std::invalid_argument(number);
    } catch (const std::exception&) {
      throw InputError(InputErrorKind::InvalidParameters, "bad expected genus in case: " + text);
    }
    rest = rest.substr(0, at);
  }
  if (rest.empty()) throw InputError(InputErrorKind::InvalidParameters, "empty bench case: " + text);
  bc.spec = rest;
  if (bc.label.empty()) bc.label = rest;
  return bc;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum orientable genus of graphs via simple-cycle face sets", "genus"};
  app.require_subcommand(1);
  Common c;

  auto* genus = app.add_subcommand("genus", "exact genus");
  add_common(genus, c);
  bool no_blocks = false;
  genus->add_flag("--no-blocks", no_blocks, "search the whole graph instead of its biconnected blocks");

  auto* bounds = app.add_subcommand("bounds", "progressive genus bracket");
  add_common(bounds, c, "--max-seconds,--budget-seconds");

  auto* verify = app.add_subcommand("verify", "check an embedding certificate");
  add_common(verify, c);
  std::string cert_path;
  verify->add_option("--certificate", cert_path, "certificate file")->required();

  auto* cycles = app.add_subcommand("cycles", "simple cycle census");
  add_common(cycles, c);
  bool list = false;
  int only_length = 0;
  cycles->add_flag("--list", list, "print every cycle as a vertex sequence");
  cycles->add_option("--length", only_length, "restrict to one length");

  auto* dists = app.add_subcommand("distributions", "cycle distributions summing to 2m");
  add_common(dists, c);
  int only_faces = 0;
  std::int64_t limit = -1;
  dists->add_option("--faces", only_faces, "restrict to one face count");
  dists->add_option("--limit", limit, "stop after this many lines");
  bool euler_only = false;
  dists->add_flag("--euler-parity", euler_only, "only face counts with n - m + F even");

  auto* oracle = app.add_subcommand("oracle", "brute force over rotation systems");
  add_common(oracle, c);
  double cap = 1e8;
  bool witness = false;
  oracle->add_option("--cap", cap, "maximum rotation systems to enumerate");
  oracle->add_flag("--witness", witness, "print the optimal rotation");

  auto* bench = app.add_subcommand("bench", "genus table over named cases");
  add_common(bench, c);
  std::vector<std::string> suites;
  std::vector<std::string> cases;
  bench->add_option("--suite", suites, "named suite")->take_all();
  bench->add_option("--case", cases, "label=spec@expected")->take_all();

  auto* gen = app.add_subcommand("generate", "print a generated graph");
  add_common(gen, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  try {
    if (*genus) return cmd_genus(c, no_blocks, out, err);
    if (*bounds) return cmd_bounds(c, out, err);
    if (*verify) return cmd_verify(c, cert_path, out, err);
    if (*cycles) return cmd_cycles(c, list, only_length, out);
    if (*dists) return cmd_distributions(c, only_faces, limit, euler_only, out);
    if (*oracle) return cmd_oracle(c, cap, witness, out, err);
    if (*bench) return cmd_bench(c, suites, cases, out, err);
    if (*gen) return cmd_generate(c, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}

}  // namespace genus::cli
