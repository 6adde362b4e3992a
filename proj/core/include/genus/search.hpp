#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "genus/cycles.hpp"
#include "genus/distribution.hpp"
#include "genus/graph.hpp"

namespace genus {

// A corner is a face passing through `vertex`: it arrives through global
// slot in_slot and leaves through global slot out_slot. In the rotation at
// that vertex, out_slot must be the successor of in_slot.
struct Corner {
  Vertex vertex;
  int in_slot;
  int out_slot;
};

// Oriented simple cycle as a candidate facial walk. corners[i] sits at the
// head of darts[i].
struct OrientedCycleView {
  std::span<const DartId> darts;
  std::span<const Corner> corners;
  int length() const { return static_cast<int>(darts.size()); }
};

struct OrientedCycle {
  std::vector<DartId> darts;
  std::vector<Corner> corners;

  OrientedCycleView view() const { return {darts, corners}; }
  int length() const { return static_cast<int>(darts.size()); }
};

OrientedCycle orient(const Graph& g, const SimpleCycle& cycle, bool reversed);
// Closed walk given by its vertices; each step uses the lowest-id edge
// between consecutive vertices. Throws std::invalid_argument on non-edges.
OrientedCycle oriented_from_walk(const Graph& g, std::span<const Vertex> walk);
std::vector<Vertex> walk_vertices(const Graph& g, std::span<const DartId> darts);

// Both orientations of a set of cycles, with per-dart candidate lists
// ordered by (length, cycle order, forward before reverse). Cycles have to
// be appended in non-decreasing length.
class FaceCandidates {
 public:
  FaceCandidates() = default;
  explicit FaceCandidates(const Graph& g);
  static FaceCandidates from_index(const Graph& g, const CycleIndex& index);

  void add_cycles(const Graph& g, std::span<const SimpleCycle> cycles);

  int size() const { return static_cast<int>(offset_.size()) - 1; }
  OrientedCycleView view(int id) const {
    const auto first = static_cast<std::size_t>(offset_[id]);
    const auto count = static_cast<std::size_t>(offset_[id + 1] - offset_[id]);
    return {std::span<const DartId>(darts_).subspan(first, count),
            std::span<const Corner>(corners_).subspan(first, count)};
  }
  int length(int id) const { return offset_[id + 1] - offset_[id]; }
  std::span<const int> through(DartId d) const { return by_dart_[d]; }
  // through(d) split into runs of equal length, shortest first.
  struct Run {
    int length;
    int begin;
    int end;
  };
  std::span<const Run> runs(DartId d) const { return runs_[d]; }
  std::span<const int> run_ids(DartId d, const Run& run) const {
    return std::span<const int>(by_dart_[d]).subspan(run.begin, run.end - run.begin);
  }
  int max_length() const { return max_length_; }

 private:
  std::vector<int> offset_{0};
  std::vector<DartId> darts_;
  std::vector<Corner> corners_;
  std::vector<std::vector<int>> by_dart_;
  std::vector<std::vector<Run>> runs_;
  int max_length_ = 0;
};

// Partial face set during the search. Tracks used darts, per-vertex face
// quota (degree minus faces chosen through the vertex), the partial
// rotation (successor/predecessor per global slot) and unfilled parts.
class SearchState {
 public:
  // Throws std::invalid_argument if dist.edge_sum() != 2m.
  SearchState(const Graph& g, const CycleDistribution& dist);

  const Graph& graph() const { return *graph_; }
  bool dart_used(DartId d) const { return used_[d] != 0; }
  int remaining_quota(Vertex v) const { return quota_[v]; }
  int successor(int global_slot) const { return succ_[global_slot]; }
  int predecessor(int global_slot) const { return pred_[global_slot]; }
  int remaining_parts(int length) const {
    return length < static_cast<int>(remaining_.size()) ? remaining_[length] : 0;
  }
  int max_part() const { return static_cast<int>(remaining_.size()) - 1; }
  int unused_darts() const { return unused_; }
  std::span<const int> chosen() const { return chosen_; }

  void push(OrientedCycleView face, int id);
  void pop(OrientedCycleView face);

 private:
  const Graph* graph_;
  std::vector<std::uint8_t> used_;
  std::vector<int> quota_;
  std::vector<int> succ_;
  std::vector<int> pred_;
  std::vector<int> remaining_;
  std::vector<int> chosen_;
  int unused_;
};

// Which pruning clauses potential_max_fit applies. Unused-dart exclusivity
// is always checked; disabling the others only costs time because
// verify_rotation still vets every completed fit.
struct FitChecks {
  bool vertex_quota = true;
  bool corner_rotation = true;
};

// True iff `face` can join the state: its darts are unused, every vertex on
// it still needs a face, and its corners keep each vertex's partial rotation
// injective without a reversed corner pair or a closed orbit shorter than
// the vertex degree.
bool potential_max_fit(const SearchState& state, OrientedCycleView face, FitChecks checks = {});

// Partially used vertex with the least remaining quota (smallest id on
// ties); otherwise the smallest unused vertex; nullopt once every quota is
// zero.
std::optional<Vertex> select_branch_vertex(const SearchState& state);

// Every vertex's successor map is one cycle through all of its slots.
bool verify_rotation(const SearchState& state);
// next[i] is the successor of i; true iff next is a single cyclic
// permutation of 0..size-1.
bool is_single_orbit(std::span<const int> next);

// Node and wall-clock limits shared by every search of one computation.
// Thread-safe; searches charge nodes in small batches.
class SearchBudget {
 public:
  SearchBudget() = default;
  SearchBudget(std::optional<double> max_seconds, std::optional<std::uint64_t> max_nodes);

  // Adds `nodes` and reports whether the budget still holds.
  bool charge(std::uint64_t nodes);
  bool exhausted() const;
  std::uint64_t nodes() const { return used_.load(std::memory_order_relaxed); }
  double elapsed_seconds() const;

  // Called (from any search thread) each time the node total crosses a
  // multiple of progress_every.
  std::function<void(std::uint64_t nodes)> on_progress;
  std::uint64_t progress_every = 1u << 22;

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::optional<std::uint64_t> max_nodes_;
  std::atomic<std::uint64_t> used_{0};
};

enum class SearchStatus { Found, Exhausted, BudgetExceeded };
const char* to_string(SearchStatus status);

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  // Dart sequences of the facial walks when Found.
  std::vector<std::vector<DartId>> faces;
  std::uint64_t nodes = 0;
};

struct SearchOptions {
  FitChecks checks;
  int threads = 1;
};

// Looks for oriented cycles realising `dist` as a valid set of facial walks.
// Deterministic when threads == 1.
SearchResult search(const Graph& g, const FaceCandidates& candidates, const CycleDistribution& dist,
                    SearchBudget& budget, const SearchOptions& options = {});
SearchResult search(const Graph& g, const CycleIndex& index, const CycleDistribution& dist,
                    SearchBudget& budget, const SearchOptions& options = {});

}  // namespace genus
