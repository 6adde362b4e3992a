#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace genus {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;
// A dart is one orientation of an undirected edge: dart 2e runs u->v for
// edge e = {u, v} as stored, dart 2e+1 runs v->u.
using DartId = std::int32_t;

struct Edge {
  Vertex u;
  Vertex v;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

struct DirectedEdge {
  EdgeId edge_id;
  Vertex tail;  // source
  Vertex head;  // target
};

enum class InputErrorKind {
  MalformedLine,
  SelfLoop,
  DisconnectedGraph,
  MalformedGraph6,
  InvalidParameters,
};

const char* to_string(InputErrorKind kind);

class InputError : public std::runtime_error {
 public:
  InputError(InputErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  InputErrorKind kind() const { return kind_; }

 private:
  InputErrorKind kind_;
};

// Immutable connected loopless multigraph over vertices 0..n-1.
//
// Every vertex keeps its incidences sorted by (neighbor, edge id); the
// position of an incidence in that list is its "slot". Slots are also laid
// out globally (slot_base(v) + local slot) so that per-slot state in the hot
// search loop lives in flat arrays of size 2m. The global slot of a dart is
// the slot it leaves its tail through.
class Graph {
 public:
  Graph() = default;

  // Throws InputError(SelfLoop | DisconnectedGraph | InvalidParameters).
  static Graph from_edges(int n, std::vector<Edge> edges);

  int vertex_count() const { return static_cast<int>(slot_base_.size()) - 1; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int dart_count() const { return 2 * edge_count(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::span<const Incidence> neighbors(Vertex v) const {
    return {incidences_.data() + slot_base_[v],
            static_cast<std::size_t>(degree(v))};
  }
  int degree(Vertex v) const { return slot_base_[v + 1] - slot_base_[v]; }
  int slot_base(Vertex v) const { return slot_base_[v]; }
  int max_degree() const;

  DartId dart(EdgeId e, Vertex from) const {
    return 2 * e + (edges_[e].u == from ? 0 : 1);
  }
  static DartId reverse(DartId d) { return d ^ 1; }
  Vertex tail(DartId d) const {
    const Edge& e = edges_[d >> 1];
    return (d & 1) ? e.v : e.u;
  }
  Vertex head(DartId d) const {
    const Edge& e = edges_[d >> 1];
    return (d & 1) ? e.u : e.v;
  }
  DirectedEdge directed_edge(DartId d) const { return {d >> 1, tail(d), head(d)}; }

  // Local slot of the dart at its tail, and the same as a global index.
  int local_slot(DartId d) const { return dart_slot_[d]; }
  int global_slot(DartId d) const { return slot_base_[tail(d)] + dart_slot_[d]; }
  // Dart leaving v through local slot s.
  DartId dart_at(Vertex v, int s) const {
    return dart(incidences_[slot_base_[v] + s].edge, v);
  }

  bool has_parallel_edges() const { return has_parallel_; }
  // Length of a shortest cycle (2 when parallel edges exist), 0 if acyclic.
  int girth() const;

  // Local slots at u of every edge joining u and v (parallel copies included).
  std::span<const Incidence> edges_between(Vertex u, Vertex v) const;

 private:
  std::vector<Edge> edges_;
  std::vector<Incidence> incidences_;
  std::vector<int> slot_base_{0};
  std::vector<int> dart_slot_;
  bool has_parallel_ = false;
};

// Induced subgraph on a set of edges, relabelled densely; keeps the maps
// back to the parent's labels. Used for block decomposition.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent_vertex;
  std::vector<EdgeId> to_parent_edge;
};

// Biconnected components as edge sets, in discovery order. A bridge is a
// block with a single edge.
std::vector<std::vector<EdgeId>> biconnected_blocks(const Graph& g);
Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edge_ids);

}  // namespace genus
