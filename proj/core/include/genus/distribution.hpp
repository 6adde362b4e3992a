#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace genus {

struct LengthAvailability {
  int length;
  std::int64_t available;
};

// A multiset of face lengths. parts never holds a zero multiplicity.
struct CycleDistribution {
  std::map<int, int> parts;

  int face_count() const;
  std::int64_t edge_sum() const;
  int smallest_part() const { return parts.empty() ? 0 : parts.begin()->first; }
  int largest_part() const { return parts.empty() ? 0 : parts.rbegin()->first; }
  // Parts in ascending order with repetition, e.g. {3:2, 5:1} -> 3 3 5.
  std::vector<int> ascending() const;
  // "2x3 + 1x5"
  std::string to_string() const;

  friend bool operator==(const CycleDistribution&, const CycleDistribution&) = default;
};

// Availability of length k is twice the number of undirected k-cycles: a
// cycle may bound two faces, one per orientation.
std::vector<LengthAvailability> population_from_counts(const std::map<int, std::int64_t>& counts);

using DistributionVisitor = std::function<bool(const CycleDistribution&)>;

// Every distribution with edge_sum == s within availability, grouped by
// increasing largest part. Visitor returns false to stop; the function then
// returns false.
bool generate_distributions(std::span<const LengthAvailability> population, std::int64_t s,
                            const DistributionVisitor& visit);

// Only the distributions with exactly `faces` parts, in tie-break order
// (see face_count_order).
bool generate_distributions_with_faces(std::span<const LengthAvailability> population,
                                       std::int64_t s, int faces,
                                       const DistributionVisitor& visit);

// Strict weak order used for buffered consumption: more faces first; equal
// face counts compare their ascending part sequences lexicographically,
// smaller first (many small faces before fewer large ones).
bool face_count_order(const CycleDistribution& a, const CycleDistribution& b);

// Stable sort by face_count_order.
std::vector<CycleDistribution> order_by_face_count(std::vector<CycleDistribution> distributions);

inline constexpr std::size_t kDefaultDistributionBudget = 1'000'000;

// Collects and orders every distribution. Throws CapacityExceeded (from
// cycles.hpp) once more than `budget` distributions exist; callers then
// fall back to the streaming order of generate_distributions.
std::vector<CycleDistribution> buffered_distributions(std::span<const LengthAvailability> population,
                                                      std::int64_t s,
                                                      std::size_t budget = kDefaultDistributionBudget);

}  // namespace genus
