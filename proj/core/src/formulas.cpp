#include "genus/formulas.hpp"

#include <string>

#include "genus/graph.hpp"

namespace genus {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

std::int64_t genus_formula_complete(std::int64_t n) {
  if (n < 3) {
    throw InputError(InputErrorKind::InvalidParameters,
                     "genus_formula_complete: n must be >= 3, got " + std::to_string(n));
  }
  return ceil_div((n - 3) * (n - 4), 12);
}

std::int64_t genus_formula_complete_bipartite(std::int64_t a, std::int64_t b) {
  if (a < 2 || b < 2) {
    throw InputError(InputErrorKind::InvalidParameters,
                     "genus_formula_complete_bipartite: sides must be >= 2");
  }
  return ceil_div((a - 2) * (b - 2), 4);
}

}  // namespace genus
