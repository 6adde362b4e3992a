#include "genus/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "genus/engine.hpp"
#include "genus/oracle.hpp"

namespace genus {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int ceil_div(int a, int b) { return -floor_div(-a, b); }

// splitmix64 step, to derive independent seeds from one master seed.
std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

InitialBounds initial_bounds(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  InitialBounds b;
  b.upper = std::max(0, floor_div(m - n + 2, 2));
  // (m - 4n/3 + 2) / 2 == (3m - 4n + 6) / 6
  b.literal_lower = floor_div(3 * m - 4 * n + 6, 6);
  const int girth = g.girth();
  // A forest has a single face and genus 0.
  b.girth_lower = girth == 0 ? 0 : ceil_div(m - n + 2 - 2 * m / girth, 2);
  b.lower = std::max(0, b.girth_lower);
  return b;
}

std::optional<HeuristicResult> heuristic_upper_bound(const Graph& g, int tries, std::uint64_t seed) {
  if (tries < 1) return std::nullopt;
  std::mt19937_64 rng(seed);
  RotationSystem rot = RotationSystem::identity(g);
  std::optional<HeuristicResult> best;
  for (int t = 0; t < tries; ++t) {
    for (auto& order : rot.order) std::shuffle(order.begin(), order.end(), rng);
    auto faces = trace_faces(g, rot);
    const int genus = euler_genus(g, static_cast<int>(faces.size()));
    if (!best || genus < best->genus) best = HeuristicResult{genus, make_certificate(g, faces)};
  }
  return best;
}

struct BoundsRefiner::Impl {
  struct Track {
    Subgraph block;
    std::unique_ptr<FaceLevelSearch> levels;  // null for bridges
    int lower = 0;
    int upper = 0;
    bool done = false;  // faces known for genus == upper == lower
    std::vector<std::vector<DartId>> faces;
  };

  Graph graph;
  std::uint64_t seed;
  std::vector<Track> tracks;
};

BoundsRefiner::BoundsRefiner(const Graph& g, std::uint64_t seed)
    : impl_(std::make_unique<Impl>(Impl{g, seed, {}})), initial_(initial_bounds(g)) {
  state_.lower = initial_.lower;
  state_.upper = initial_.upper;
  if (g.edge_count() == 0) {
    state_.certificate = make_certificate(g, {});
  }
  for (const auto& edges : biconnected_blocks(g)) {
    Impl::Track t;
    t.block = edge_subgraph(g, edges);
    const InitialBounds ib = initial_bounds(t.block.graph);
    t.lower = ib.lower;
    t.upper = ib.upper;
    if (t.block.graph.edge_count() <= 1) {
      t.done = true;
    } else {
      t.levels = std::make_unique<FaceLevelSearch>(t.block.graph);
    }
    impl_->tracks.push_back(std::move(t));
  }
  state_.history.push_back({0, state_.lower, state_.upper, 0.0});
}

BoundsRefiner::~BoundsRefiner() = default;
BoundsRefiner::BoundsRefiner(BoundsRefiner&&) noexcept = default;
BoundsRefiner& BoundsRefiner::operator=(BoundsRefiner&&) noexcept = default;

const BoundsState& BoundsRefiner::refine(const RefineLimits& limits) {
  ++state_.iteration;
  SearchBudget budget(limits.max_seconds, limits.max_nodes);
  const Graph& g = impl_->graph;

  if (!state_.closed() || !state_.certificate) {
    // Random rotations, one node charged per sample.
    if (state_.upper > state_.lower) {
      std::mt19937_64 rng(mix_seed(impl_->seed ^ mix_seed(state_.iteration)));
      for (int t = 0; t < limits.heuristic_tries; ++t) {
        if (!budget.charge(1)) break;
        auto h = heuristic_upper_bound(g, 1, rng());
        if (h && h->genus < state_.upper) {
          state_.upper = h->genus;
          state_.certificate = std::move(h->certificate);
        }
      }
    }

    // One face-count level per unfinished block.
    for (auto& t : impl_->tracks) {
      if (t.done) continue;
      if (state_.lower == state_.upper && state_.certificate) break;
      if (!budget.charge(1)) break;
      const int faces = t.levels->faces_for_genus(t.lower);
      LevelOutcome out = t.levels->search_level(faces, budget, limits.search);
      if (out.status == SearchStatus::BudgetExceeded) break;
      if (out.status == SearchStatus::Found) {
        t.upper = t.lower;
        t.faces = std::move(out.faces);
        t.done = true;
      } else if (++t.lower > t.upper) {
        throw std::logic_error("block exhausted every face count up to its genus ceiling");
      }
    }

    int lower_sum = 0;
    int upper_sum = 0;
    bool all_done = true;
    for (const auto& t : impl_->tracks) {
      lower_sum += t.lower;
      upper_sum += t.upper;
      all_done = all_done && t.done;
    }
    state_.lower = std::max(state_.lower, lower_sum);
    if (all_done && (upper_sum < state_.upper || !state_.certificate)) {
      std::vector<Subgraph> blocks;
      std::vector<std::vector<std::vector<DartId>>> faces;
      for (auto& t : impl_->tracks) {
        blocks.push_back(t.block);
        faces.push_back(t.faces);
      }
      const auto merged = merge_block_faces(g, blocks, faces);
      state_.upper = std::min(state_.upper, upper_sum);
      state_.certificate = make_certificate(g, merged);
    } else if (upper_sum < state_.upper) {
      state_.upper = upper_sum;
      state_.certificate.reset();
    }
    if (state_.lower > state_.upper) {
      throw std::logic_error("bounds crossed: lower " + std::to_string(state_.lower) + " > upper " +
                             std::to_string(state_.upper));
    }
  }

  elapsed_ += budget.elapsed_seconds();
  state_.history.push_back({state_.iteration, state_.lower, state_.upper, elapsed_});
  return state_;
}

}  // namespace genus
