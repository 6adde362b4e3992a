#include <doctest.h>

#include <numeric>

#include "genus/generators.hpp"
#include "genus/oracle.hpp"

using namespace genus;

TEST_CASE("face tracing") {
  const Graph c6 = cycle(6);
  auto faces = trace_faces(c6, RotationSystem::identity(c6));
  REQUIRE(faces.size() == 2);
  CHECK(faces[0].size() == 6);
  CHECK(faces[1].size() == 6);

  // Sorted neighbour order at every vertex of K4 traces two faces (genus 1).
  const Graph k4 = complete(4);
  auto k4_faces = trace_faces(k4, RotationSystem::identity(k4));
  CHECK(k4_faces.size() == 2);
  CHECK(euler_genus(k4, 2) == 1);
}

TEST_CASE("traced faces partition the darts") {
  const Graph g = generate("petersen");
  RotationSystem rot = RotationSystem::identity(g);
  std::swap(rot.order[3][1], rot.order[3][2]);
  std::swap(rot.order[7][0], rot.order[7][2]);
  CHECK(rot.valid_for(g));
  std::vector<int> seen(g.dart_count(), 0);
  std::size_t total = 0;
  for (const auto& f : trace_faces(g, rot)) {
    total += f.size();
    for (std::size_t i = 0; i < f.size(); ++i) {
      ++seen[f[i]];
      CHECK(g.head(f[i]) == g.tail(f[(i + 1) % f.size()]));
    }
  }
  CHECK(total == static_cast<std::size_t>(g.dart_count()));
  CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
}

TEST_CASE("rotation validity") {
  const Graph g = complete(4);
  RotationSystem rot = RotationSystem::identity(g);
  rot.order[2] = {0, 0, 1};
  CHECK_FALSE(rot.valid_for(g));
}

TEST_CASE("brute force genus") {
  CHECK(brute_force_genus(complete(4)).genus == 0);
  CHECK(brute_force_genus(complete(5)).genus == 1);
  CHECK(brute_force_genus(complete_bipartite(3, 3)).genus == 1);
  CHECK(brute_force_genus(generate("petersen")).genus == 1);
  CHECK(brute_force_genus(path(3)).genus == 0);

  OracleOptions exhaustive;
  exhaustive.stop_at_lower_bound = false;
  auto k4 = brute_force_genus(complete(4), exhaustive);
  // one vertex fixed: 2^3 of the 16 systems
  CHECK(k4.rotations_tried == 8);
  CHECK(rotation_count(complete(4)) == 8);
  auto witness_faces = trace_faces(complete(4), k4.witness);
  CHECK(witness_faces.size() == 4);
}

TEST_CASE("K4 has exactly two planar rotation systems") {
  // Full enumeration without the symmetry quotient.
  const Graph g = complete(4);
  RotationSystem rot = RotationSystem::identity(g);
  int planar = 0;
  int total = 0;
  for (int mask = 0; mask < 16; ++mask) {
    for (Vertex v = 0; v < 4; ++v) rot.order[v] = (mask >> v & 1) ? std::vector<int>{0, 2, 1} : std::vector<int>{0, 1, 2};
    ++total;
    planar += euler_genus(g, static_cast<int>(trace_faces(g, rot).size())) == 0;
  }
  CHECK(total == 16);
  CHECK(planar == 2);
}

TEST_CASE("cap") {
  OracleOptions tight;
  tight.cap = 100;
  CHECK_THROWS_AS(brute_force_genus(complete(6), tight), CapExceeded);
}
