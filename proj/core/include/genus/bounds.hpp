#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "genus/certificate.hpp"
#include "genus/graph.hpp"
#include "genus/search.hpp"

namespace genus {

struct InitialBounds {
  int lower = 0;          // max(0, girth bound); the one reported
  int upper = 0;          // max(0, floor((m - n + 2) / 2))
  int literal_lower = 0;  // floor((m - 4n/3 + 2) / 2), logged only: K4 gives 1
  int girth_lower = 0;    // ceil((m - n + 2 - floor(2m / girth)) / 2), unclamped
};

InitialBounds initial_bounds(const Graph& g);

struct HeuristicResult {
  int genus = 0;
  EmbeddingCertificate certificate;
};

// Best of `tries` uniformly random rotation systems. nullopt only when
// tries < 1.
std::optional<HeuristicResult> heuristic_upper_bound(const Graph& g, int tries, std::uint64_t seed);

struct BoundsStep {
  int iteration = 0;
  int lower = 0;
  int upper = 0;
  double elapsed_seconds = 0;
};

struct BoundsState {
  int lower = 0;
  int upper = 0;
  int iteration = 0;
  std::vector<BoundsStep> history;
  // Embedding of genus `upper`, once one is known.
  std::optional<EmbeddingCertificate> certificate;

  bool closed() const { return lower == upper; }
};

struct RefineLimits {
  std::optional<double> max_seconds;
  std::optional<std::uint64_t> max_nodes;
  int heuristic_tries = 32;
  SearchOptions search;
};

// Holds per-block level searches (and their cycle caches) across steps.
// Each refine() call advances at most one face-count level per block it
// touches and never tightens a bound on a budget stop.
class BoundsRefiner {
 public:
  explicit BoundsRefiner(const Graph& g, std::uint64_t seed = 1);
  ~BoundsRefiner();
  BoundsRefiner(BoundsRefiner&&) noexcept;
  BoundsRefiner& operator=(BoundsRefiner&&) noexcept;

  const BoundsState& state() const { return state_; }
  const InitialBounds& initial() const { return initial_; }
  const BoundsState& refine(const RefineLimits& limits);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  InitialBounds initial_;
  BoundsState state_;
  double elapsed_ = 0;
};

}  // namespace genus
