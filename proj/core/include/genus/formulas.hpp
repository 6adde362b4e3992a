#pragma once

#include <cstdint>

namespace genus {

/// Ringel–Youngs: genus of K_n is ceil((n-3)(n-4)/12), n >= 3.
std::int64_t genus_formula_complete(std::int64_t n);

/// Ringel: genus of K_{a,b} is ceil((a-2)(b-2)/4), a, b >= 2.
std::int64_t genus_formula_complete_bipartite(std::int64_t a, std::int64_t b);

}  // namespace genus
