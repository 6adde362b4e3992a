#include <doctest.h>

#include <array>

#include "genus/formulas.hpp"
#include "genus/generators.hpp"

using namespace genus;

TEST_CASE("families have the right size") {
  CHECK(complete(7).edge_count() == 21);
  CHECK(complete_bipartite(3, 4).edge_count() == 12);
  CHECK(generate("multipartite:2,2,2,2").edge_count() == 24);
  CHECK(generate("multipartite:2,2,2,2,2").edge_count() == 40);
  CHECK(cycle(6).edge_count() == 6);
  CHECK(path(5).edge_count() == 4);
  const Graph c14 = generate("circulant:14:1,2,3,6");
  CHECK(c14.edge_count() == 56);
  CHECK(c14.max_degree() == 8);
  // 9 and 18 - 9 coincide, so C18(1,3,9) is 5-regular.
  const Graph c18 = generate("circulant:18:1,3,9");
  CHECK(c18.edge_count() == 45);
  for (Vertex v = 0; v < c18.vertex_count(); ++v) CHECK(c18.degree(v) == 5);
  CHECK(generate("circulant:20:1,3,5").edge_count() == 60);
}

TEST_CASE("cubic cage fixtures") {
  const std::array<std::array<int, 2>, 8> sizes{{{3, 4}, {4, 6}, {5, 10}, {6, 14}, {7, 24}, {8, 30}, {10, 70}, {12, 126}}};
  for (auto [girth, n] : sizes) {
    const Graph g = cubic_cage(girth);
    CAPTURE(girth);
    CHECK(g.vertex_count() == n);
    CHECK(g.girth() == girth);
    for (Vertex v = 0; v < n; ++v) CHECK(g.degree(v) == 3);
  }
  CHECK(available_cubic_cages() == std::vector<int>{3, 4, 5, 6, 7, 8, 10, 12});
  CHECK_THROWS_AS(cubic_cage(9), InputError);
}

TEST_CASE("generator strings") {
  CHECK(generate("petersen").vertex_count() == 10);
  CHECK(generate("heawood").vertex_count() == 14);
  CHECK(generate("cage:5").edge_count() == 15);
  for (const char* bad : {"", "complete", "complete:x", "complete:-1", "circulant:14", "bogus:3",
                          "bipartite:3", "cycle:2", "complete:7:1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(generate(bad), InputError);
  }
}

TEST_CASE("closed-form genus formulas") {
  const int complete_expected[] = {0, 0, 1, 1, 1, 2, 3};  // n = 3..9
  for (int n = 3; n <= 9; ++n) CHECK(genus_formula_complete(n) == complete_expected[n - 3]);
  CHECK(genus_formula_complete(12) == 6);
  CHECK(genus_formula_complete_bipartite(3, 3) == 1);
  CHECK(genus_formula_complete_bipartite(4, 4) == 1);
  CHECK(genus_formula_complete_bipartite(3, 6) == 1);
  CHECK(genus_formula_complete_bipartite(2, 7) == 0);
  CHECK(genus_formula_complete_bipartite(4, 5) == 2);
  CHECK_THROWS_AS(genus_formula_complete(2), InputError);
  CHECK_THROWS_AS(genus_formula_complete_bipartite(1, 3), InputError);
}
