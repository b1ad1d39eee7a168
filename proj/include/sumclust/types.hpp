#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

namespace sumclust {

// Distances are exact integer numerators over a per-space common denominator;
// every cost comparison in the library is integer arithmetic.
using Weight = std::int64_t;
using Cost = std::int64_t;

// Sentinel for "no feasible solution". Sums must go through add_cost.
inline constexpr Cost kInfeasible = std::numeric_limits<Cost>::max();

inline Cost add_cost(Cost a, Cost b) {
  if (a == kInfeasible || b == kInfeasible) return kInfeasible;
  return a + b;
}

// indices: strictly increasing point ids of one MetricSpace.
struct PointSubset {
  std::vector<int> indices;

  int size() const { return static_cast<int>(indices.size()); }
  bool empty() const { return indices.empty(); }
  bool contains(int p) const {
    return std::binary_search(indices.begin(), indices.end(), p);
  }
  bool operator==(const PointSubset&) const = default;
  bool operator<(const PointSubset& o) const { return indices < o.indices; }
};

PointSubset make_subset(std::vector<int> indices);
PointSubset full_set(int n);
PointSubset set_union(const PointSubset& a, const PointSubset& b);
PointSubset set_intersection(const PointSubset& a, const PointSubset& b);
PointSubset set_difference(const PointSubset& a, const PointSubset& b);

struct Ball {
  int center = 0;
  Weight radius = 0;
  bool operator==(const Ball&) const = default;
};

struct Clustering {
  std::vector<PointSubset> clusters;
};

// A ball cover, or the explicit "no solution" sentinel (cost +inf).
struct BallCover {
  std::vector<Ball> balls;
  bool feasible = true;

  static BallCover infeasible_cover() { return BallCover{{}, false}; }
};

}  // namespace sumclust
