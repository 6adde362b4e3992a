#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "genus/cycles.hpp"
#include "genus/graph.hpp"
#include "genus/graph_io.hpp"

namespace genus::testing {

inline std::string data_path(const std::string& name) { return std::string(GENUS_TEST_DATA_DIR) + "/" + name; }

// Every connected simple graph on 1..6 vertices, one per isomorphism class.
inline std::vector<Graph> census() {
  std::ifstream in(data_path("connected_le6.g6"));
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(parse_graph6(line));
  }
  return out;
}

// Random connected simple graph: a random tree, then extra edges, every
// degree capped at max_degree.
inline Graph random_connected(std::mt19937_64& rng, int max_vertices, int max_degree) {
  const int n = std::uniform_int_distribution<int>(2, max_vertices)(rng);
  std::vector<int> deg(n, 0);
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> present;
  auto add = [&](int u, int v) {
    edges.push_back({u, v});
    present.insert(std::minmax(u, v));
    ++deg[u];
    ++deg[v];
  };
  for (int v = 1; v < n; ++v) {
    std::vector<int> open;
    for (int u = 0; u < v; ++u) {
      if (deg[u] < max_degree) open.push_back(u);
    }
    add(open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)], v);
  }
  const int extra = std::uniform_int_distribution<int>(0, 2 * n)(rng);
  for (int i = 0; i < extra; ++i) {
    const int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (u == v || deg[u] >= max_degree || deg[v] >= max_degree) continue;
    if (present.count(std::minmax(u, v))) continue;
    add(u, v);
  }
  return Graph::from_edges(n, edges);
}

// Johnson's elementary-circuit algorithm on the symmetric digraph; every
// undirected cycle of length >= 3 shows up once per direction. Returns
// canonical vertex sequences (min first, then smaller neighbour second).
inline std::set<std::vector<Vertex>> johnson_cycles(const Graph& g) {
  const int n = g.vertex_count();
  std::set<std::vector<Vertex>> found;
  std::vector<Vertex> stack;
  std::vector<char> blocked(n);
  std::vector<std::set<Vertex>> blist(n);

  auto canonical = [](std::vector<Vertex> c) {
    auto it = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), it, c.end());
    if (c.size() > 2 && c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
    return c;
  };

  for (Vertex s = 0; s < n; ++s) {
    auto unblock = [&](auto&& self, Vertex u) -> void {
      blocked[u] = 0;
      auto pending = std::move(blist[u]);
      blist[u].clear();
      for (Vertex w : pending) {
        if (blocked[w]) self(self, w);
      }
    };
    auto circuit = [&](auto&& self, Vertex v) -> bool {
      bool closed = false;
      stack.push_back(v);
      blocked[v] = 1;
      for (const auto& inc : g.neighbors(v)) {
        const Vertex w = inc.neighbor;
        if (w < s) continue;
        if (w == s) {
          if (stack.size() >= 3) found.insert(canonical(stack));
          closed = true;
        } else if (!blocked[w] && self(self, w)) {
          closed = true;
        }
      }
      if (closed) {
        unblock(unblock, v);
      } else {
        for (const auto& inc : g.neighbors(v)) {
          if (inc.neighbor >= s) blist[inc.neighbor].insert(v);
        }
      }
      stack.pop_back();
      return closed;
    };
    std::fill(blocked.begin(), blocked.end(), 0);
    for (auto& b : blist) b.clear();
    circuit(circuit, s);
  }
  return found;
}

}  // namespace genus::testing
