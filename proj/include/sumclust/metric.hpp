#pragma once

#include <cstdint>
#include <vector>

#include "sumclust/types.hpp"

namespace sumclust {

// Finite metric space. dist(i,j) is an integer numerator; the real-valued
// distance is dist(i,j)/denom. denom matters only at the I/O boundary.
// The total point order used by every tie-break is index order 0..n-1.
struct MetricSpace {
  int n = 0;
  std::uint64_t denom = 1;
  std::vector<Weight> d;  // n*n, row-major

  Weight dist(int i, int j) const { return d[static_cast<std::size_t>(i) * n + j]; }
};

// Checks symmetry, zero diagonal and the triangle inequality. Throws
// AsymmetricDistance / NonzeroDiagonal / TriangleViolation naming the
// offending indices; std::invalid_argument on negative entries or bad shape.
MetricSpace validate_metric(int n, std::vector<Weight> dist, std::uint64_t denom = 1);

struct DiameterWitness {
  int x = 0;
  int y = 0;
  Weight diam = 0;
};

// Lexicographically smallest pair (x, y) realizing diam(S); singleton gives
// (p, p, 0). Throws EmptySubset.
DiameterWitness diameter_witness(const MetricSpace& space, const PointSubset& S);

struct RadiusWitness {
  int center = 0;
  Weight radius = 0;
};

// Center from `centers` minimizing the max distance to S, ties to the
// smallest index. Throws EmptySubset.
RadiusWitness cluster_radius(const MetricSpace& space, const PointSubset& S,
                             const PointSubset& centers);

Cost msd_cost(const MetricSpace& space, const Clustering& c);
Cost msr_cost(const BallCover& b);  // infeasible sentinel -> kInfeasible

// All-pairs shortest paths over the complete graph weighted by the input
// distances. Output entries never exceed the input entries.
MetricSpace metric_closure(const MetricSpace& space);

// Points p of the whole space with d(center, p) <= radius, in index order.
PointSubset ball_points(const MetricSpace& space, const Ball& ball);
PointSubset subset_in_ball(const MetricSpace& space, const PointSubset& S, const Ball& ball);
bool covers(const MetricSpace& space, const std::vector<Ball>& balls, const PointSubset& S);

// Equivalence classes of points at pairwise distance zero (valid metrics
// make zero-distance transitive), ordered by smallest member.
std::vector<PointSubset> zero_distance_groups(const MetricSpace& space);

}  // namespace sumclust
