#include "genus/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace genus {

const char* to_string(InputErrorKind kind) {
  switch (kind) {
    case InputErrorKind::MalformedLine: return "MalformedLine";
    case InputErrorKind::SelfLoop: return "SelfLoop";
    case InputErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case InputErrorKind::MalformedGraph6: return "MalformedGraph6";
    case InputErrorKind::InvalidParameters: return "InvalidParameters";
  }
  return "?";
}

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
  if (n < 1) {
    throw InputError(InputErrorKind::InvalidParameters, "graph needs at least one vertex");
  }
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw InputError(InputErrorKind::InvalidParameters,
                       "edge endpoint out of range: " + std::to_string(e.u) + " " +
                           std::to_string(e.v));
    }
    if (e.u == e.v) {
      throw InputError(InputErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    }
  }

  Graph g;
  g.edges_ = std::move(edges);
  const int m = static_cast<int>(g.edges_.size());

  std::vector<int> degree(n, 0);
  for (const Edge& e : g.edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  g.slot_base_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) g.slot_base_[v + 1] = g.slot_base_[v] + degree[v];

  g.incidences_.resize(2 * m);
  std::vector<int> fill(g.slot_base_.begin(), g.slot_base_.end() - 1);
  for (EdgeId e = 0; e < m; ++e) {
    g.incidences_[fill[g.edges_[e].u]++] = {g.edges_[e].v, e};
    g.incidences_[fill[g.edges_[e].v]++] = {g.edges_[e].u, e};
  }
  g.dart_slot_.assign(2 * m, -1);
  for (Vertex v = 0; v < n; ++v) {
    auto first = g.incidences_.begin() + g.slot_base_[v];
    auto last = g.incidences_.begin() + g.slot_base_[v + 1];
    std::sort(first, last, [](const Incidence& a, const Incidence& b) {
      return a.neighbor != b.neighbor ? a.neighbor < b.neighbor : a.edge < b.edge;
    });
    for (auto it = first; it != last; ++it) {
      if (it != first && std::prev(it)->neighbor == it->neighbor) g.has_parallel_ = true;
      g.dart_slot_[g.dart(it->edge, v)] = static_cast<int>(it - first);
    }
  }

  // Connectivity.
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.neighbors(v)) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  if (reached != n) {
    throw InputError(InputErrorKind::DisconnectedGraph,
                     "graph is disconnected (" + std::to_string(reached) + " of " +
                         std::to_string(n) + " vertices reachable from 0)");
  }
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

std::span<const Incidence> Graph::edges_between(Vertex u, Vertex v) const {
  auto adj = neighbors(u);
  auto range = std::equal_range(adj.begin(), adj.end(), Incidence{v, 0},
                                [](const Incidence& a, const Incidence& b) {
                                  return a.neighbor < b.neighbor;
                                });
  return {range.first, range.second};
}

int Graph::girth() const {
  if (has_parallel_) return 2;
  const int n = vertex_count();
  int best = 0;
  std::vector<int> dist(n), parent_edge(n);
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent_edge[s] = -1;
    queue.push(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      if (best && 2 * dist[v] + 1 >= best) continue;
      for (const Incidence& inc : neighbors(v)) {
        if (inc.edge == parent_edge[v]) continue;
        if (dist[inc.neighbor] < 0) {
          dist[inc.neighbor] = dist[v] + 1;
          parent_edge[inc.neighbor] = inc.edge;
          queue.push(inc.neighbor);
        } else {
          int cycle = dist[v] + dist[inc.neighbor] + 1;
          if (!best || cycle < best) best = cycle;
        }
      }
    }
  }
  return best;
}

std::vector<std::vector<EdgeId>> biconnected_blocks(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> edge_stack;
  std::vector<std::vector<EdgeId>> blocks;
  int timer = 0;

  struct Frame {
    Vertex v;
    EdgeId via;
    int next;
  };
  std::vector<Frame> frames;
  disc[0] = low[0] = timer++;
  frames.push_back({0, -1, 0});
  while (!frames.empty()) {
    Frame& f = frames.back();
    auto adj = g.neighbors(f.v);
    if (f.next < static_cast<int>(adj.size())) {
      const Incidence inc = adj[f.next++];
      if (inc.edge == f.via) continue;
      if (disc[inc.neighbor] < 0) {
        edge_stack.push_back(inc.edge);
        disc[inc.neighbor] = low[inc.neighbor] = timer++;
        frames.push_back({inc.neighbor, inc.edge, 0});
      } else if (disc[inc.neighbor] < disc[f.v]) {
        edge_stack.push_back(inc.edge);
        low[f.v] = std::min(low[f.v], disc[inc.neighbor]);
      }
      continue;
    }
    const Frame done = f;
    frames.pop_back();
    if (frames.empty()) break;
    Frame& parent = frames.back();
    low[parent.v] = std::min(low[parent.v], low[done.v]);
    if (low[done.v] >= disc[parent.v]) {
      std::vector<EdgeId> block;
      while (true) {
        EdgeId e = edge_stack.back();
        edge_stack.pop_back();
        block.push_back(e);
        if (e == done.via) break;
      }
      std::sort(block.begin(), block.end());
      blocks.push_back(std::move(block));
    }
  }
  return blocks;
}

Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edge_ids) {
  Subgraph sub;
  std::vector<Vertex> local(g.vertex_count(), -1);
  std::vector<Edge> edges;
  edges.reserve(edge_ids.size());
  auto label = [&](Vertex v) {
    if (local[v] < 0) {
      local[v] = static_cast<Vertex>(sub.to_parent_vertex.size());
      sub.to_parent_vertex.push_back(v);
    }
    return local[v];
  };
  for (EdgeId e : edge_ids) {
    Vertex a = label(g.edge(e).u);
    Vertex b = label(g.edge(e).v);
    edges.push_back({a, b});
    sub.to_parent_edge.push_back(e);
  }
  sub.graph = Graph::from_edges(static_cast<int>(sub.to_parent_vertex.size()), std::move(edges));
  return sub;
}

}  // namespace genus
