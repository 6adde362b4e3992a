#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "genus/graph.hpp"

namespace genus {

// Cyclic order of local slots at each vertex: order[v] is a permutation of
// 0..deg(v)-1 read cyclically.
struct RotationSystem {
  std::vector<std::vector<int>> order;

  // Rotation taking every vertex's slots in increasing order.
  static RotationSystem identity(const Graph& g);
  bool valid_for(const Graph& g) const;
};

// Faces as dart sequences. After dart u->v the walk continues with v->w
// where w follows u in v's cyclic order. Faces are reported in order of
// their smallest dart, each starting from that dart.
std::vector<std::vector<DartId>> trace_faces(const Graph& g, const RotationSystem& rotation);

// Euler genus of an embedding with the given face count; the face count of
// an edgeless graph is 1.
int euler_genus(const Graph& g, int faces);

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  int genus = 0;
  RotationSystem witness;
  std::uint64_t rotations_tried = 0;
};

struct OracleOptions {
  // Maximum number of rotation systems to enumerate. Mirror images have the
  // same faces, so one maximum-degree vertex only takes the orders whose
  // second entry is below its last, halving the count.
  double cap = 1e8;
  // Stop as soon as an embedding meets the girth Euler bound.
  bool stop_at_lower_bound = true;
};

// Minimum genus over all rotation systems. Independent of the cycle search;
// only graph_core is shared. Throws CapExceeded when the rotation count
// exceeds options.cap.
OracleResult brute_force_genus(const Graph& g, const OracleOptions& options = {});

// Number of rotation systems brute_force_genus would enumerate.
double rotation_count(const Graph& g);

}  // namespace genus
