#include "genus/engine.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace genus {

FaceLevelSearch::FaceLevelSearch(Graph g, std::size_t cycle_budget)
    : graph_(std::move(g)), girth_(graph_.girth()), cycle_budget_(cycle_budget), candidates_(graph_) {}

bool FaceLevelSearch::parity_ok(int faces) const {
  return (graph_.vertex_count() - graph_.edge_count() + faces) % 2 == 0;
}

int FaceLevelSearch::faces_for_genus(int genus) const {
  return 2 - 2 * genus - graph_.vertex_count() + graph_.edge_count();
}

int FaceLevelSearch::first_level() const {
  if (girth_ == 0) return 0;
  const int m = graph_.edge_count();
  int faces = std::min(2 * m / girth_, m - graph_.vertex_count() + 2);
  if (!parity_ok(faces)) --faces;
  return std::max(faces, 0);
}

void FaceLevelSearch::ensure_lengths(int max_length) {
  max_length = std::min(max_length, graph_.vertex_count());
  for (int k = enumerated_up_to_ + 1; k <= max_length; ++k) {
    std::vector<SimpleCycle> cycles;
    visit_cycles_of_length(graph_, k, [&](const SimpleCycle& c) {
      stored_ += c.vertices.size();
      if (stored_ > cycle_budget_) {
        throw CapacityExceeded("cycle store exceeds budget of " + std::to_string(cycle_budget_) +
                               " vertex entries at length " + std::to_string(k));
      }
      cycles.push_back(c);
      return true;
    });
    if (!cycles.empty()) counts_[k] = static_cast<std::int64_t>(cycles.size());
    candidates_.add_cycles(graph_, cycles);
    enumerated_up_to_ = k;
  }
}

LevelOutcome FaceLevelSearch::search_level(
    int faces, SearchBudget& budget, const SearchOptions& options,
    const std::function<void(const CycleDistribution&)>& on_distribution) {
  LevelOutcome outcome;
  if (faces < 1 || girth_ == 0 || !parity_ok(faces)) return outcome;
  const int darts = graph_.dart_count();
  ensure_lengths(darts - girth_ * (faces - 1));
  const auto population = population_from_counts(counts_);

  bool stop = false;
  generate_distributions_with_faces(population, darts, faces, [&](const CycleDistribution& dist) {
    ++outcome.distributions;
    if (on_distribution) on_distribution(dist);
    SearchResult r = search(graph_, candidates_, dist, budget, options);
    if (r.status == SearchStatus::Found) {
      outcome.status = SearchStatus::Found;
      outcome.faces = std::move(r.faces);
      stop = true;
    } else if (r.status == SearchStatus::BudgetExceeded) {
      outcome.status = SearchStatus::BudgetExceeded;
      stop = true;
    }
    return !stop;
  });
  return outcome;
}

RotationSystem rotation_from_faces(const Graph& g, std::span<const std::vector<DartId>> faces) {
  std::vector<int> succ(g.dart_count(), -1);
  for (const auto& face : faces) {
    for (std::size_t i = 0; i < face.size(); ++i) {
      const DartId in = face[i];
      const DartId out = face[(i + 1) % face.size()];
      succ[g.global_slot(Graph::reverse(in))] = g.global_slot(out);
    }
  }
  RotationSystem rot;
  rot.order.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int base = g.slot_base(v);
    const int deg = g.degree(v);
    std::vector<char> placed(deg, 0);
    for (int s = 0; s < deg; ++s) {
      if (placed[s]) continue;
      int j = s;
      while (j >= 0 && !placed[j]) {
        placed[j] = 1;
        rot.order[v].push_back(j);
        j = succ[base + j] < 0 ? -1 : succ[base + j] - base;
      }
    }
  }
  return rot;
}

std::vector<std::vector<DartId>> merge_block_faces(
    const Graph& g, std::span<const Subgraph> blocks,
    std::span<const std::vector<std::vector<DartId>>> block_faces) {
  std::vector<std::vector<DartId>> lifted;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Subgraph& sub = blocks[b];
    for (const auto& face : block_faces[b]) {
      std::vector<DartId> walk;
      for (DartId d : face) {
        const EdgeId parent_edge = sub.to_parent_edge[d >> 1];
        walk.push_back(g.dart(parent_edge, sub.to_parent_vertex[sub.graph.tail(d)]));
      }
      lifted.push_back(std::move(walk));
    }
  }
  // Each block contributes one orbit (or a lone bridge slot) at every
  // vertex; rotation_from_faces concatenates them in slot order.
  return trace_faces(g, rotation_from_faces(g, lifted));
}

EmbeddingCertificate make_certificate(const Graph& g, std::span<const std::vector<DartId>> faces) {
  EmbeddingCertificate cert;
  cert.graph = fingerprint(g);
  for (const auto& face : faces) cert.faces.push_back(walk_vertices(g, face));
  const int f = g.edge_count() == 0 ? 1 : static_cast<int>(faces.size());
  cert.claimed_genus = genus_from_face_count(g.vertex_count(), g.edge_count(), f);
  return cert;
}

const char* to_string(GenusStatus status) {
  switch (status) {
    case GenusStatus::Exact: return "Exact";
    case GenusStatus::BudgetExceeded: return "BudgetExceeded";
    case GenusStatus::NoCycleFaceSet: return "NoCycleFaceSet";
  }
  return "?";
}

namespace {

// Ceiling of the Euler bound with every face at least girth long.
int girth_genus_floor(const Graph& g) {
  const int girth = g.girth();
  if (girth == 0) return 0;
  const int num = g.edge_count() - g.vertex_count() + 2 - 2 * g.edge_count() / girth;
  return num <= 0 ? 0 : (num + 1) / 2;
}

int cycle_rank_ceiling(const Graph& g) {
  return std::max(0, (g.edge_count() - g.vertex_count() + 2) / 2);
}

struct BlockOutcome {
  GenusStatus status = GenusStatus::Exact;
  int genus = 0;
  int lower = 0;
  int upper = 0;
  std::vector<std::vector<DartId>> faces;
};

BlockOutcome solve_block(const Graph& block, const GenusOptions& options, SearchBudget& budget,
                         std::atomic<std::uint64_t>& distributions, std::atomic<int>& target) {
  BlockOutcome out;
  if (block.edge_count() <= 1) {  // single vertex or bridge
    out.lower = out.upper = 0;
    return out;
  }
  FaceLevelSearch levels(block, options.cycle_budget);
  out.lower = girth_genus_floor(block);
  out.upper = cycle_rank_ceiling(block);
  for (int faces = levels.first_level(); faces >= 1; faces -= 2) {
    target.store(faces);
    LevelOutcome level = levels.search_level(faces, budget, options.search,
                                             [&](const CycleDistribution&) { ++distributions; });
    const int genus = genus_from_face_count(block.vertex_count(), block.edge_count(), faces);
    if (level.status == SearchStatus::Found) {
      out.genus = out.lower = out.upper = genus;
      out.faces = std::move(level.faces);
      return out;
    }
    if (level.status == SearchStatus::BudgetExceeded) {
      out.status = GenusStatus::BudgetExceeded;
      out.lower = std::max(out.lower, genus);
      return out;
    }
    out.lower = std::max(out.lower, genus + 1);
  }
  out.status = GenusStatus::NoCycleFaceSet;
  return out;
}

}  // namespace

GenusResult compute_genus(const Graph& g, const GenusOptions& options) {
  SearchBudget budget(options.max_seconds, options.max_nodes);
  std::atomic<std::uint64_t> distributions{0};
  std::atomic<int> target{0};
  if (options.on_progress) {
    budget.progress_every = options.progress_every;
    budget.on_progress = [&](std::uint64_t nodes) {
      options.on_progress({distributions.load(), target.load(), nodes});
    };
  }

  GenusResult result;
  std::vector<Subgraph> blocks;
  const bool split = options.split_blocks && g.edge_count() > 0;
  if (split) {
    for (const auto& edges : biconnected_blocks(g)) blocks.push_back(edge_subgraph(g, edges));
  }

  auto finish = [&] {
    result.distributions = distributions.load();
    result.nodes = budget.nodes();
    result.seconds = budget.elapsed_seconds();
    return result;
  };

  if (!split || blocks.size() == 1) {
    result.blocks = 1;
    BlockOutcome out = solve_block(g, options, budget, distributions, target);
    if (g.edge_count() == 1 && split) out.faces = trace_faces(g, RotationSystem::identity(g));
    result.status = out.status;
    result.genus = out.genus;
    result.lower = out.lower;
    result.upper = out.upper;
    result.faces = std::move(out.faces);
    if (result.status == GenusStatus::Exact && g.edge_count() <= 1) {
      result.faces = trace_faces(g, RotationSystem::identity(g));
    }
    return finish();
  }

  result.blocks = static_cast<int>(blocks.size());
  std::vector<std::vector<std::vector<DartId>>> block_faces(blocks.size());
  GenusStatus status = GenusStatus::Exact;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    BlockOutcome out;
    if (status == GenusStatus::Exact) {
      out = solve_block(blocks[b].graph, options, budget, distributions, target);
    } else {
      out.lower = girth_genus_floor(blocks[b].graph);
      out.upper = cycle_rank_ceiling(blocks[b].graph);
    }
    if (out.status != GenusStatus::Exact && status == GenusStatus::Exact) status = out.status;
    result.lower += out.lower;
    result.upper += out.upper;
    result.genus += out.genus;
    block_faces[b] = std::move(out.faces);
  }
  result.status = status;
  if (status == GenusStatus::Exact) {
    result.faces = merge_block_faces(g, blocks, block_faces);
    const int traced = euler_genus(g, static_cast<int>(result.faces.size()));
    if (traced != result.genus) {
      throw std::logic_error("merged block embedding has genus " + std::to_string(traced) +
                             ", blocks sum to " + std::to_string(result.genus));
    }
  }
  return finish();
}

}  // namespace genus
