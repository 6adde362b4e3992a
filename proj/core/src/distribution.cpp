#include "genus/distribution.hpp"

#include <algorithm>

#include "genus/cycles.hpp"

namespace genus {

int CycleDistribution::face_count() const {
  int total = 0;
  for (const auto& [length, count] : parts) total += count;
  return total;
}

std::int64_t CycleDistribution::edge_sum() const {
  std::int64_t total = 0;
  for (const auto& [length, count] : parts) total += static_cast<std::int64_t>(length) * count;
  return total;
}

std::vector<int> CycleDistribution::ascending() const {
  std::vector<int> out;
  for (const auto& [length, count] : parts) out.insert(out.end(), count, length);
  return out;
}

std::string CycleDistribution::to_string() const {
  std::string out;
  for (const auto& [length, count] : parts) {
    if (!out.empty()) out += " + ";
    out += std::to_string(count) + "x" + std::to_string(length);
  }
  return out;
}

std::vector<LengthAvailability> population_from_counts(const std::map<int, std::int64_t>& counts) {
  std::vector<LengthAvailability> out;
  for (const auto& [length, count] : counts) {
    if (count > 0) out.push_back({length, 2 * count});
  }
  return out;
}

namespace {

std::vector<LengthAvailability> normalized(std::span<const LengthAvailability> population) {
  std::vector<LengthAvailability> out;
  for (const LengthAvailability& p : population) {
    if (p.length > 0 && p.available > 0) out.push_back(p);
  }
  std::sort(out.begin(), out.end(),
            [](const LengthAvailability& a, const LengthAvailability& b) { return a.length < b.length; });
  return out;
}

// Recursive descent over lengths from index `i` downwards. `reach[i]` is the
// largest sum the lengths 0..i can contribute, used to prune dead branches.
class DescendingEnumerator {
 public:
  DescendingEnumerator(std::vector<LengthAvailability> pop, const DistributionVisitor& visit)
      : pop_(std::move(pop)), visit_(visit), reach_(pop_.size()) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < pop_.size(); ++i) {
      total += pop_[i].length * pop_[i].available;
      reach_[i] = total;
    }
  }

  bool run(std::int64_t s) {
    for (std::size_t top = 0; top < pop_.size(); ++top) {
      const auto& p = pop_[top];
      for (std::int64_t c = 1; c <= p.available && c * p.length <= s; ++c) {
        current_.parts[p.length] = static_cast<int>(c);
        bool ok = descend(static_cast<int>(top) - 1, s - c * p.length);
        current_.parts.erase(p.length);
        if (!ok) return false;
      }
    }
    return true;
  }

 private:
  bool descend(int i, std::int64_t remaining) {
    if (remaining == 0) return visit_(current_);
    if (i < 0 || remaining > reach_[i]) return true;
    const auto& p = pop_[i];
    std::int64_t most = std::min<std::int64_t>(p.available, remaining / p.length);
    for (std::int64_t c = most; c >= 0; --c) {
      if (c) current_.parts[p.length] = static_cast<int>(c);
      bool ok = descend(i - 1, remaining - c * p.length);
      if (c) current_.parts.erase(p.length);
      if (!ok) return false;
    }
    return true;
  }

  std::vector<LengthAvailability> pop_;
  const DistributionVisitor& visit_;
  std::vector<std::int64_t> reach_;
  CycleDistribution current_;
};

class FixedFaceEnumerator {
 public:
  FixedFaceEnumerator(std::vector<LengthAvailability> pop, const DistributionVisitor& visit)
      : pop_(std::move(pop)), visit_(visit) {}

  bool run(std::int64_t s, int faces) {
    if (pop_.empty() || faces < 1) return true;
    return ascend(0, s, faces);
  }

 private:
  bool ascend(std::size_t i, std::int64_t remaining, std::int64_t faces) {
    if (faces == 0) return remaining == 0 ? visit_(current_) : true;
    if (i == pop_.size()) return true;
    if (remaining < faces * pop_[i].length) return true;
    if (remaining > faces * pop_.back().length) return true;
    const auto& p = pop_[i];
    std::int64_t most = std::min({p.available, faces, remaining / p.length});
    for (std::int64_t c = most; c >= 0; --c) {
      if (c) current_.parts[p.length] = static_cast<int>(c);
      bool ok = ascend(i + 1, remaining - c * p.length, faces - c);
      if (c) current_.parts.erase(p.length);
      if (!ok) return false;
    }
    return true;
  }

  std::vector<LengthAvailability> pop_;
  const DistributionVisitor& visit_;
  CycleDistribution current_;
};

}  // namespace

bool generate_distributions(std::span<const LengthAvailability> population, std::int64_t s,
                            const DistributionVisitor& visit) {
  if (s <= 0) return true;
  return DescendingEnumerator(normalized(population), visit).run(s);
}

bool generate_distributions_with_faces(std::span<const LengthAvailability> population,
                                       std::int64_t s, int faces,
                                       const DistributionVisitor& visit) {
  if (s <= 0) return true;
  return FixedFaceEnumerator(normalized(population), visit).run(s, faces);
}

bool face_count_order(const CycleDistribution& a, const CycleDistribution& b) {
  int fa = a.face_count();
  int fb = b.face_count();
  if (fa != fb) return fa > fb;
  return a.ascending() < b.ascending();
}

std::vector<CycleDistribution> order_by_face_count(std::vector<CycleDistribution> distributions) {
  std::stable_sort(distributions.begin(), distributions.end(), face_count_order);
  return distributions;
}

std::vector<CycleDistribution> buffered_distributions(std::span<const LengthAvailability> population,
                                                      std::int64_t s, std::size_t budget) {
  std::vector<CycleDistribution> all;
  generate_distributions(population, s, [&](const CycleDistribution& d) {
    if (all.size() == budget) {
      throw CapacityExceeded("more than " + std::to_string(budget) + " cycle distributions");
    }
    all.push_back(d);
    return true;
  });
  return order_by_face_count(std::move(all));
}

}  // namespace genus
