#include "genus/search.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace genus {

OrientedCycle orient(const Graph& g, const SimpleCycle& cycle, bool reversed) {
  const int k = cycle.length();
  OrientedCycle out;
  out.darts.resize(k);
  for (int i = 0; i < k; ++i) {
    DartId forward = g.dart(cycle.edges[i], cycle.vertices[i]);
    if (reversed) {
      out.darts[k - 1 - i] = Graph::reverse(forward);
    } else {
      out.darts[i] = forward;
    }
  }
  out.corners.resize(k);
  for (int i = 0; i < k; ++i) {
    DartId in = out.darts[i];
    DartId next = out.darts[(i + 1) % k];
    out.corners[i] = {g.head(in), g.global_slot(Graph::reverse(in)), g.global_slot(next)};
  }
  return out;
}

OrientedCycle oriented_from_walk(const Graph& g, std::span<const Vertex> walk) {
  const int k = static_cast<int>(walk.size());
  if (k < 2) throw std::invalid_argument("walk needs at least two vertices");
  SimpleCycle cycle;
  cycle.vertices.assign(walk.begin(), walk.end());
  for (int i = 0; i < k; ++i) {
    auto joins = g.edges_between(walk[i], walk[(i + 1) % k]);
    if (joins.empty()) {
      throw std::invalid_argument("no edge " + std::to_string(walk[i]) + "-" +
                                  std::to_string(walk[(i + 1) % k]));
    }
    cycle.edges.push_back(joins.front().edge);
  }
  return orient(g, cycle, false);
}

std::vector<Vertex> walk_vertices(const Graph& g, std::span<const DartId> darts) {
  std::vector<Vertex> out;
  out.reserve(darts.size());
  for (DartId d : darts) out.push_back(g.tail(d));
  return out;
}

FaceCandidates::FaceCandidates(const Graph& g) : by_dart_(g.dart_count()), runs_(g.dart_count()) {}

FaceCandidates FaceCandidates::from_index(const Graph& g, const CycleIndex& index) {
  FaceCandidates out(g);
  for (int k : index.lengths()) out.add_cycles(g, index.by_length(k));
  return out;
}

void FaceCandidates::add_cycles(const Graph& g, std::span<const SimpleCycle> cycles) {
  if (by_dart_.empty()) {
    by_dart_.resize(g.dart_count());
    runs_.resize(g.dart_count());
  }
  for (const SimpleCycle& c : cycles) {
    if (c.length() < max_length_) {
      throw std::invalid_argument("FaceCandidates: cycles must arrive in non-decreasing length");
    }
    max_length_ = c.length();
    for (bool reversed : {false, true}) {
      OrientedCycle oc = orient(g, c, reversed);
      const int id = size();
      for (DartId d : oc.darts) {
        auto& runs = runs_[d];
        const int at = static_cast<int>(by_dart_[d].size());
        if (runs.empty() || runs.back().length != c.length()) runs.push_back({c.length(), at, at});
        by_dart_[d].push_back(id);
        runs.back().end = at + 1;
      }
      darts_.insert(darts_.end(), oc.darts.begin(), oc.darts.end());
      corners_.insert(corners_.end(), oc.corners.begin(), oc.corners.end());
      offset_.push_back(static_cast<int>(darts_.size()));
    }
  }
}

SearchState::SearchState(const Graph& g, const CycleDistribution& dist)
    : graph_(&g),
      used_(g.dart_count(), 0),
      quota_(g.vertex_count()),
      succ_(g.dart_count(), -1),
      pred_(g.dart_count(), -1),
      remaining_(dist.largest_part() + 1, 0),
      unused_(g.dart_count()) {
  if (dist.edge_sum() != g.dart_count()) {
    throw std::invalid_argument("distribution sums to " + std::to_string(dist.edge_sum()) +
                                ", graph has " + std::to_string(g.dart_count()) + " darts");
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) quota_[v] = g.degree(v);
  for (const auto& [length, count] : dist.parts) remaining_[length] = count;
}

void SearchState::push(OrientedCycleView face, int id) {
  for (DartId d : face.darts) used_[d] = 1;
  for (const Corner& c : face.corners) {
    --quota_[c.vertex];
    succ_[c.in_slot] = c.out_slot;
    pred_[c.out_slot] = c.in_slot;
  }
  --remaining_[face.length()];
  unused_ -= face.length();
  chosen_.push_back(id);
}

void SearchState::pop(OrientedCycleView face) {
  for (DartId d : face.darts) used_[d] = 0;
  for (const Corner& c : face.corners) {
    ++quota_[c.vertex];
    succ_[c.in_slot] = -1;
    pred_[c.out_slot] = -1;
  }
  ++remaining_[face.length()];
  unused_ += face.length();
  chosen_.pop_back();
}

bool potential_max_fit(const SearchState& state, OrientedCycleView face, FitChecks checks) {
  for (DartId d : face.darts) {
    if (state.dart_used(d)) return false;
  }
  const Graph& g = state.graph();
  if (checks.vertex_quota) {
    for (const Corner& c : face.corners) {
      if (state.remaining_quota(c.vertex) < 1) return false;
    }
  }
  if (checks.corner_rotation) {
    for (const Corner& c : face.corners) {
      if (state.successor(c.in_slot) >= 0 || state.predecessor(c.out_slot) >= 0) return false;
      const int degree = g.degree(c.vertex);
      if (degree <= 2) continue;
      // Reversed corner pair: some face already turns out_slot -> in_slot.
      if (state.successor(c.out_slot) == c.in_slot) return false;
      // Would in -> out close an orbit that misses some slot?
      int size = 2;
      int j = c.out_slot;
      while (state.successor(j) >= 0 && state.successor(j) != c.in_slot) {
        j = state.successor(j);
        ++size;
      }
      if (state.successor(j) == c.in_slot && size < degree) return false;
    }
  }
  return true;
}

std::optional<Vertex> select_branch_vertex(const SearchState& state) {
  const Graph& g = state.graph();
  std::optional<Vertex> partial;
  std::optional<Vertex> untouched;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int q = state.remaining_quota(v);
    if (q == 0) continue;
    if (q < g.degree(v)) {
      if (!partial || q < state.remaining_quota(*partial)) partial = v;
    } else if (!untouched) {
      untouched = v;
    }
  }
  return partial ? partial : untouched;
}

bool is_single_orbit(std::span<const int> next) {
  const int size = static_cast<int>(next.size());
  if (size == 0) return true;
  int j = 0;
  for (int steps = 1; steps <= size; ++steps) {
    j = next[j];
    if (j < 0 || j >= size) return false;
    if (j == 0) return steps == size;
  }
  return false;
}

bool verify_rotation(const SearchState& state) {
  const Graph& g = state.graph();
  std::vector<int> local;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int base = g.slot_base(v);
    local.resize(g.degree(v));
    for (int s = 0; s < g.degree(v); ++s) {
      const int next = state.successor(base + s);
      local[s] = next < 0 ? -1 : next - base;
    }
    if (!is_single_orbit(local)) return false;
  }
  return true;
}

SearchBudget::SearchBudget(std::optional<double> max_seconds, std::optional<std::uint64_t> max_nodes)
    : max_nodes_(max_nodes) {
  if (max_seconds) {
    deadline_ = start_ + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                             std::chrono::duration<double>(*max_seconds));
  }
}

bool SearchBudget::charge(std::uint64_t nodes) {
  const std::uint64_t before = used_.fetch_add(nodes, std::memory_order_relaxed);
  const std::uint64_t after = before + nodes;
  if (on_progress && progress_every && before / progress_every != after / progress_every) {
    on_progress(after);
  }
  return !exhausted();
}

bool SearchBudget::exhausted() const {
  if (max_nodes_ && used_.load(std::memory_order_relaxed) > *max_nodes_) return true;
  return deadline_ && std::chrono::steady_clock::now() >= *deadline_;
}

double SearchBudget::elapsed_seconds() const {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::Exhausted: return "Exhausted";
    case SearchStatus::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

namespace {

DartId first_unused_out_dart(const SearchState& state, Vertex v) {
  const Graph& g = state.graph();
  for (int s = 0; s < g.degree(v); ++s) {
    DartId d = g.dart_at(v, s);
    if (!state.dart_used(d)) return d;
  }
  return -1;
}

class Worker {
 public:
  static constexpr std::uint64_t kBatch = 64;

  Worker(const Graph& g, const FaceCandidates& candidates, const CycleDistribution& dist,
         SearchBudget& budget, const SearchOptions& options, const std::atomic<bool>& cancel)
      : candidates_(candidates),
        state_(g, dist),
        budget_(budget),
        checks_(options.checks),
        cancel_(cancel) {}

  SearchState& state() { return state_; }
  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }

  // Charges the remaining unbatched nodes.
  void settle() {
    budget_.charge(pending_);
    pending_ = 0;
  }

  bool tick() {
    ++nodes_;
    if (++pending_ >= kBatch || nodes_ == 1) {
      bool ok = budget_.charge(pending_);
      pending_ = 0;
      if (!ok || cancel_.load(std::memory_order_relaxed)) {
        aborted_ = true;
        return false;
      }
    }
    return true;
  }

  // Candidates at the current branch point that survive potential_max_fit.
  std::vector<int> branch_candidates() {
    std::vector<int> out;
    auto v = select_branch_vertex(state_);
    if (!v) return out;
    DartId d = first_unused_out_dart(state_, *v);
    for (const auto& run : candidates_.runs(d)) {
      if (run.length > state_.max_part()) break;
      if (state_.remaining_parts(run.length) == 0) continue;
      for (int id : candidates_.run_ids(d, run)) {
        if (potential_max_fit(state_, candidates_.view(id), checks_)) out.push_back(id);
      }
    }
    return out;
  }

  // On success the state keeps the chosen faces.
  bool dfs() {
    if (!tick()) return false;
    auto v = select_branch_vertex(state_);
    if (!v) return verify_rotation(state_);
    DartId d = first_unused_out_dart(state_, *v);
    for (const auto& run : candidates_.runs(d)) {
      if (run.length > state_.max_part()) break;
      if (state_.remaining_parts(run.length) == 0) continue;
      for (int id : candidates_.run_ids(d, run)) {
        OrientedCycleView face = candidates_.view(id);
        if (!potential_max_fit(state_, face, checks_)) continue;
        state_.push(face, id);
        if (dfs()) return true;
        state_.pop(face);
        if (aborted_) return false;
      }
    }
    return false;
  }

  std::vector<std::vector<DartId>> faces() const {
    std::vector<std::vector<DartId>> out;
    for (int id : state_.chosen()) {
      auto darts = candidates_.view(id).darts;
      out.emplace_back(darts.begin(), darts.end());
    }
    return out;
  }

 private:
  const FaceCandidates& candidates_;
  SearchState state_;
  SearchBudget& budget_;
  FitChecks checks_;
  const std::atomic<bool>& cancel_;
  std::uint64_t nodes_ = 0;
  std::uint64_t pending_ = 0;
  bool aborted_ = false;
};

}  // namespace

SearchResult search(const Graph& g, const FaceCandidates& candidates, const CycleDistribution& dist,
                    SearchBudget& budget, const SearchOptions& options) {
  SearchResult result;
  std::atomic<bool> cancel{false};
  Worker root(g, candidates, dist, budget, options, cancel);

  if (options.threads <= 1) {
    bool found = root.dfs();
    root.settle();
    result.nodes = root.nodes();
    if (found) {
      result.status = SearchStatus::Found;
      result.faces = root.faces();
    } else {
      result.status = root.aborted() ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted;
    }
    return result;
  }

  // Split the first branch point among workers.
  if (!root.tick()) {
    root.settle();
    result.status = SearchStatus::BudgetExceeded;
    result.nodes = root.nodes();
    return result;
  }
  if (!select_branch_vertex(root.state())) {
    result.status = verify_rotation(root.state()) ? SearchStatus::Found : SearchStatus::Exhausted;
    result.nodes = root.nodes();
    return result;
  }
  const std::vector<int> top = root.branch_candidates();
  root.settle();

  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  bool found = false;
  bool aborted = false;
  std::uint64_t nodes = root.nodes();
  auto run = [&] {
    Worker worker(g, candidates, dist, budget, options, cancel);
    bool local_found = false;
    while (!cancel.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= top.size()) break;
      OrientedCycleView face = candidates.view(top[i]);
      worker.state().push(face, top[i]);
      if (worker.dfs()) {
        local_found = true;
        break;
      }
      worker.state().pop(face);
      if (worker.aborted()) break;
    }
    worker.settle();
    std::lock_guard lock(mutex);
    nodes += worker.nodes();
    if (local_found && !found) {
      found = true;
      result.faces = worker.faces();
      cancel.store(true);
    }
    if (worker.aborted() && !local_found) aborted = true;
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < options.threads; ++t) pool.emplace_back(run);
  for (auto& th : pool) th.join();

  result.nodes = nodes;
  if (found) {
    result.status = SearchStatus::Found;
  } else {
    result.status = aborted ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted;
  }
  return result;
}

SearchResult search(const Graph& g, const CycleIndex& index, const CycleDistribution& dist,
                    SearchBudget& budget, const SearchOptions& options) {
  FaceCandidates candidates = FaceCandidates::from_index(g, index);
  return search(g, candidates, dist, budget, options);
}

}  // namespace genus
