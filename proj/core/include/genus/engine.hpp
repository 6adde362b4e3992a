#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "genus/certificate.hpp"
#include "genus/cycles.hpp"
#include "genus/distribution.hpp"
#include "genus/graph.hpp"
#include "genus/oracle.hpp"
#include "genus/search.hpp"

namespace genus {

struct LevelOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::vector<std::vector<DartId>> faces;
  std::uint64_t distributions = 0;
};

// Searches one face count at a time on a single graph (normally a
// biconnected block). Cycles are enumerated lazily: a level with F faces
// needs lengths up to 2m - girth * (F - 1).
class FaceLevelSearch {
 public:
  explicit FaceLevelSearch(Graph g, std::size_t cycle_budget = CycleIndex::kDefaultBudget);

  const Graph& graph() const { return graph_; }
  int girth() const { return girth_; }

  // Largest face count worth trying: min(floor(2m/girth), m - n + 2),
  // lowered to Euler parity. 0 for acyclic graphs.
  int first_level() const;
  // n - m + F even.
  bool parity_ok(int faces) const;
  // Face count of a genus-g embedding.
  int faces_for_genus(int genus) const;

  // Tries every distribution with `faces` parts, in tie-break order, until
  // one is realised. Exhausted only if every one was fully searched.
  LevelOutcome search_level(int faces, SearchBudget& budget, const SearchOptions& options,
                            const std::function<void(const CycleDistribution&)>& on_distribution = {});

  // Counts of the lengths enumerated so far.
  const std::map<int, std::int64_t>& cycle_counts() const { return counts_; }

 private:
  void ensure_lengths(int max_length);

  Graph graph_;
  int girth_;
  std::size_t cycle_budget_;
  std::size_t stored_ = 0;
  int enumerated_up_to_ = 1;
  std::map<int, std::int64_t> counts_;
  FaceCandidates candidates_;
};

// Faces of an embedding given as dart walks, turned into a certificate
// whose genus is derived from the face count.
EmbeddingCertificate make_certificate(const Graph& g, std::span<const std::vector<DartId>> faces);

// Rotation induced by a complete set of facial walks. Slots a face set
// leaves undefined (e.g. a bridge) keep their increasing order.
RotationSystem rotation_from_faces(const Graph& g, std::span<const std::vector<DartId>> faces);

// Per-block face sets lifted to the parent graph, merged at cut vertices by
// concatenating the blocks' cyclic orders, and re-traced.
std::vector<std::vector<DartId>> merge_block_faces(
    const Graph& g, std::span<const Subgraph> blocks,
    std::span<const std::vector<std::vector<DartId>>> block_faces);

struct EngineProgress {
  std::uint64_t distributions = 0;
  int target_faces = 0;
  std::uint64_t nodes = 0;
};

struct GenusOptions {
  std::optional<double> max_seconds;
  std::optional<std::uint64_t> max_nodes;
  SearchOptions search;
  // Solve biconnected blocks separately and add their genera.
  bool split_blocks = true;
  std::size_t cycle_budget = CycleIndex::kDefaultBudget;
  std::function<void(const EngineProgress&)> on_progress;
  std::uint64_t progress_every = 1u << 22;
};

enum class GenusStatus {
  Exact,
  BudgetExceeded,
  // Every face count was exhausted without a simple-cycle facial set; the
  // faces-are-simple-cycles premise fails for this graph.
  NoCycleFaceSet,
};
const char* to_string(GenusStatus status);

struct GenusResult {
  GenusStatus status = GenusStatus::Exact;
  int genus = 0;  // valid when Exact
  // Bracket known when the computation stopped (lower == upper == genus
  // when Exact).
  int lower = 0;
  int upper = 0;
  // Facial walks of an optimal embedding (Exact only).
  std::vector<std::vector<DartId>> faces;
  int blocks = 1;
  std::uint64_t distributions = 0;
  std::uint64_t nodes = 0;
  double seconds = 0;
};

// Minimum orientable genus by searching simple-cycle face sets from the
// largest feasible face count downwards.
GenusResult compute_genus(const Graph& g, const GenusOptions& options = {});

}  // namespace genus
