#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "genus/graph.hpp"

namespace genus {

// An undirected simple cycle in canonical form: vertices[0] is the minimum
// vertex and vertices[1] < vertices[k-1] (for a 2-cycle on parallel edges,
// edges[0] < edges[1] instead). edges[i] joins vertices[i] and
// vertices[(i+1) % k].
struct SimpleCycle {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  int length() const { return static_cast<int>(vertices.size()); }
  friend bool operator==(const SimpleCycle&, const SimpleCycle&) = default;
  friend auto operator<=>(const SimpleCycle&, const SimpleCycle&) = default;
};

// Visitor returns false to stop the enumeration early.
using CycleVisitor = std::function<bool(const SimpleCycle&)>;

// Every simple cycle of exactly k edges, once each. Depth-first from each
// start vertex, extending only through larger vertices and pruning paths
// that cannot close in time; on simple graphs the output is sorted by
// vertex sequence.
// Returns false if the visitor stopped the walk.
bool visit_cycles_of_length(const Graph& g, int k, const CycleVisitor& visit);
std::vector<SimpleCycle> find_cycles_of_length(const Graph& g, int k);

// Lengths with zero cycles are omitted.
std::map<int, std::int64_t> count_cycles_by_length(const Graph& g);
std::int64_t count_cycles_of_length(const Graph& g, int k);

class CapacityExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CycleRef {
  int length;
  int index;  // into by_length(length)
  friend bool operator==(const CycleRef&, const CycleRef&) = default;
};

// Cycles of a fixed set of lengths, addressable by length and by vertex.
class CycleIndex {
 public:
  static constexpr std::size_t kDefaultBudget = 20'000'000;

  // Throws CapacityExceeded once the stored cycles would hold more than
  // `budget` vertex entries in total.
  static CycleIndex build(const Graph& g, const std::set<int>& lengths,
                          std::size_t budget = kDefaultBudget);

  const std::set<int>& lengths() const { return lengths_; }
  const std::vector<SimpleCycle>& by_length(int k) const;
  // Sorted by (length, canonical sequence).
  const std::vector<CycleRef>& by_vertex(Vertex v) const { return by_vertex_[v]; }
  const SimpleCycle& cycle(CycleRef ref) const { return by_length(ref.length)[ref.index]; }
  std::int64_t count(int k) const;
  std::size_t total_cycles() const;

 private:
  std::set<int> lengths_;
  std::map<int, std::vector<SimpleCycle>> by_length_;
  std::vector<std::vector<CycleRef>> by_vertex_;
};

}  // namespace genus
