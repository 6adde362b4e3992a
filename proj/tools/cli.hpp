#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace genus::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kViolation = 2,
  kFingerprintMismatch = 3,
  kBudgetExhausted = 4,
  kBenchMismatch = 5,
};

struct BenchCase {
  std::string label;
  std::string spec;  // generator string, or "file:<path>"
  std::optional<int> expected;
};

// Named suites: complete, bipartite, cages, cages-extended, cocktail,
// circulant, gating (= all non-extended suites).
std::vector<BenchCase> bench_suite(const std::string& name);
std::vector<std::string> bench_suite_names();

// "label=spec@expected", "spec@expected" or just "spec".
BenchCase parse_bench_case(const std::string& text);

// Runs the tool on argv-style arguments (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace genus::cli
