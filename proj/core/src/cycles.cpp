#include "genus/cycles.hpp"

#include <algorithm>
#include <queue>

namespace genus {

namespace {

// Depth-first walker for paths that start at their minimum vertex. Reports
// each closing edge that yields a canonically oriented simple cycle.
class CycleWalker {
 public:
  CycleWalker(const Graph& g, int min_length, int max_length)
      : g_(g),
        min_length_(min_length),
        max_length_(max_length),
        on_path_(g.vertex_count(), 0),
        dist_(g.vertex_count(), 0) {}

  // on_cycle(vertices, edges) -> false to stop.
  template <typename OnCycle>
  bool run(OnCycle&& on_cycle) {
    for (Vertex s = 0; s < g_.vertex_count(); ++s) {
      start_ = s;
      compute_distances();
      vertices_.assign(1, s);
      edges_.clear();
      on_path_[s] = 1;
      bool keep_going = extend(on_cycle);
      on_path_[s] = 0;
      if (!keep_going) return false;
    }
    return true;
  }

 private:
  // Hop distance back to the start within vertices >= start; a path with
  // L vertices ending at x needs dist[x] more edges to close.
  void compute_distances() {
    const int n = g_.vertex_count();
    std::fill(dist_.begin(), dist_.end(), n + 1);
    std::queue<Vertex> queue;
    dist_[start_] = 0;
    queue.push(start_);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      for (const Incidence& inc : g_.neighbors(v)) {
        if (inc.neighbor > start_ && dist_[inc.neighbor] > dist_[v] + 1) {
          dist_[inc.neighbor] = dist_[v] + 1;
          queue.push(inc.neighbor);
        }
      }
    }
  }

  template <typename OnCycle>
  bool extend(OnCycle& on_cycle) {
    const int length = static_cast<int>(vertices_.size());
    const Vertex last = vertices_.back();
    if (length >= 2 && length >= min_length_) {
      for (const Incidence& close : g_.edges_between(last, start_)) {
        bool canonical = length == 2 ? close.edge > edges_[0] : vertices_[1] < last;
        if (!canonical) continue;
        edges_.push_back(close.edge);
        bool keep_going = on_cycle(vertices_, edges_);
        edges_.pop_back();
        if (!keep_going) return false;
      }
    }
    if (length == max_length_) return true;
    for (const Incidence& inc : g_.neighbors(last)) {
      const Vertex v = inc.neighbor;
      if (v <= start_ || on_path_[v]) continue;
      if (length + dist_[v] > max_length_) continue;
      vertices_.push_back(v);
      edges_.push_back(inc.edge);
      on_path_[v] = 1;
      bool keep_going = extend(on_cycle);
      on_path_[v] = 0;
      edges_.pop_back();
      vertices_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  const Graph& g_;
  int min_length_;
  int max_length_;
  Vertex start_ = 0;
  std::vector<char> on_path_;
  std::vector<int> dist_;
  std::vector<Vertex> vertices_;
  std::vector<EdgeId> edges_;
};

}  // namespace

bool visit_cycles_of_length(const Graph& g, int k, const CycleVisitor& visit) {
  if (k < 2 || k > g.vertex_count()) return true;
  CycleWalker walker(g, k, k);
  SimpleCycle cycle;
  return walker.run([&](const std::vector<Vertex>& vs, const std::vector<EdgeId>& es) {
    cycle.vertices = vs;
    cycle.edges = es;
    return visit(cycle);
  });
}

std::vector<SimpleCycle> find_cycles_of_length(const Graph& g, int k) {
  std::vector<SimpleCycle> out;
  visit_cycles_of_length(g, k, [&](const SimpleCycle& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::int64_t count_cycles_of_length(const Graph& g, int k) {
  if (k < 2 || k > g.vertex_count()) return 0;
  std::int64_t count = 0;
  CycleWalker walker(g, k, k);
  walker.run([&](const std::vector<Vertex>&, const std::vector<EdgeId>&) {
    ++count;
    return true;
  });
  return count;
}

std::map<int, std::int64_t> count_cycles_by_length(const Graph& g) {
  std::map<int, std::int64_t> counts;
  CycleWalker walker(g, 2, g.vertex_count());
  walker.run([&](const std::vector<Vertex>& vs, const std::vector<EdgeId>&) {
    ++counts[static_cast<int>(vs.size())];
    return true;
  });
  return counts;
}

CycleIndex CycleIndex::build(const Graph& g, const std::set<int>& lengths, std::size_t budget) {
  CycleIndex index;
  index.lengths_ = lengths;
  index.by_vertex_.resize(g.vertex_count());
  std::size_t stored = 0;
  for (int k : lengths) {
    auto& bucket = index.by_length_[k];
    visit_cycles_of_length(g, k, [&](const SimpleCycle& c) {
      stored += c.vertices.size();
      if (stored > budget) {
        throw CapacityExceeded("cycle index exceeds budget of " + std::to_string(budget) +
                               " vertex entries at length " + std::to_string(k));
      }
      bucket.push_back(c);
      return true;
    });
    for (int i = 0; i < static_cast<int>(bucket.size()); ++i) {
      for (Vertex v : bucket[i].vertices) index.by_vertex_[v].push_back({k, i});
    }
  }
  return index;
}

const std::vector<SimpleCycle>& CycleIndex::by_length(int k) const {
  static const std::vector<SimpleCycle> empty;
  auto it = by_length_.find(k);
  return it == by_length_.end() ? empty : it->second;
}

std::int64_t CycleIndex::count(int k) const {
  return static_cast<std::int64_t>(by_length(k).size());
}

std::size_t CycleIndex::total_cycles() const {
  std::size_t total = 0;
  for (const auto& [k, bucket] : by_length_) total += bucket.size();
  return total;
}

}  // namespace genus
