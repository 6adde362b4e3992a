#include "genus/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace genus {

RotationSystem RotationSystem::identity(const Graph& g) {
  RotationSystem rot;
  rot.order.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    rot.order[v].resize(g.degree(v));
    std::iota(rot.order[v].begin(), rot.order[v].end(), 0);
  }
  return rot;
}

bool RotationSystem::valid_for(const Graph& g) const {
  if (static_cast<int>(order.size()) != g.vertex_count()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> sorted = order[v];
    std::sort(sorted.begin(), sorted.end());
    if (static_cast<int>(sorted.size()) != g.degree(v)) return false;
    for (int i = 0; i < g.degree(v); ++i) {
      if (sorted[i] != i) return false;
    }
  }
  return true;
}

namespace {

// Flat successor table: next_out[global slot of the arriving dart's
// reverse] = dart to leave by.
std::vector<DartId> successor_darts(const Graph& g, const RotationSystem& rot) {
  std::vector<DartId> next(g.dart_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& cyc = rot.order[v];
    const int d = static_cast<int>(cyc.size());
    for (int i = 0; i < d; ++i) {
      next[g.slot_base(v) + cyc[i]] = g.dart_at(v, cyc[(i + 1) % d]);
    }
  }
  return next;
}

}  // namespace

std::vector<std::vector<DartId>> trace_faces(const Graph& g, const RotationSystem& rotation) {
  const std::vector<DartId> next = successor_darts(g, rotation);
  std::vector<char> seen(g.dart_count(), 0);
  std::vector<std::vector<DartId>> faces;
  for (DartId start = 0; start < g.dart_count(); ++start) {
    if (seen[start]) continue;
    std::vector<DartId> face;
    DartId d = start;
    while (!seen[d]) {
      seen[d] = 1;
      face.push_back(d);
      d = next[g.global_slot(Graph::reverse(d))];
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

int euler_genus(const Graph& g, int faces) {
  if (g.edge_count() == 0) faces = 1;
  return (2 - g.vertex_count() + g.edge_count() - faces) / 2;
}

namespace {

Vertex fixed_vertex(const Graph& g) {
  Vertex best = 0;
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) > g.degree(best)) best = v;
  }
  return best;
}

int girth_lower_bound(const Graph& g) {
  const int girth = g.girth();
  if (girth == 0) return 0;
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const int max_faces = 2 * m / girth;
  const int numerator = m - n + 2 - max_faces;
  return numerator <= 0 ? 0 : (numerator + 1) / 2;
}

// All cyclic orders of 0..d-1 that start with 0, lexicographic in the tail.
// With up_to_mirror, only one of each order and its reverse.
std::vector<std::vector<int>> cyclic_orders(int d, bool up_to_mirror = false) {
  std::vector<std::vector<int>> out;
  if (d == 0) return {{}};
  std::vector<int> tail(d - 1);
  std::iota(tail.begin(), tail.end(), 1);
  do {
    if (up_to_mirror && d >= 3 && tail.front() > tail.back()) continue;
    std::vector<int> order{0};
    order.insert(order.end(), tail.begin(), tail.end());
    out.push_back(std::move(order));
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

}  // namespace

double rotation_count(const Graph& g) {
  const Vertex fixed = fixed_vertex(g);
  double total = 1;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (int k = 2; k < g.degree(v); ++k) total *= k;
  }
  return g.degree(fixed) >= 3 ? total / 2 : total;
}

OracleResult brute_force_genus(const Graph& g, const OracleOptions& options) {
  const double count = rotation_count(g);
  if (count > options.cap) {
    throw CapExceeded("graph has " + std::to_string(count) + " rotation systems, cap is " +
                      std::to_string(options.cap));
  }
  const int n = g.vertex_count();
  const Vertex fixed = fixed_vertex(g);
  const int floor_genus = options.stop_at_lower_bound ? girth_lower_bound(g) : -1;

  std::vector<std::vector<std::vector<int>>> choices(n);
  for (Vertex v = 0; v < n; ++v) {
    choices[v] = cyclic_orders(g.degree(v), v == fixed);
  }

  // Odometer over per-vertex choices, last vertex fastest. Face tracing uses
  // a flat next-dart table updated only for vertices whose choice changed.
  std::vector<std::size_t> index(n, 0);
  std::vector<DartId> next(g.dart_count());
  auto install = [&](Vertex v) {
    const auto& cyc = choices[v][index[v]];
    const int d = static_cast<int>(cyc.size());
    for (int i = 0; i < d; ++i) next[g.slot_base(v) + cyc[i]] = g.dart_at(v, cyc[(i + 1) % d]);
  };
  for (Vertex v = 0; v < n; ++v) install(v);

  std::vector<int> stamp(g.dart_count(), -1);
  int round = 0;
  auto count_faces = [&] {
    ++round;
    int faces = 0;
    for (DartId start = 0; start < g.dart_count(); ++start) {
      if (stamp[start] == round) continue;
      ++faces;
      DartId d = start;
      while (stamp[d] != round) {
        stamp[d] = round;
        d = next[g.global_slot(Graph::reverse(d))];
      }
    }
    return faces;
  };

  OracleResult result;
  result.genus = -1;
  while (true) {
    ++result.rotations_tried;
    const int genus = euler_genus(g, count_faces());
    if (result.genus < 0 || genus < result.genus) {
      result.genus = genus;
      result.witness.order.assign(n, {});
      for (Vertex v = 0; v < n; ++v) result.witness.order[v] = choices[v][index[v]];
      if (genus <= floor_genus) break;
    }
    Vertex v = n - 1;
    while (v >= 0) {
      if (++index[v] < choices[v].size()) {
        install(v);
        break;
      }
      index[v] = 0;
      install(v);
      --v;
    }
    if (v < 0) break;
  }
  return result;
}

}  // namespace genus
