#pragma once

#include <vector>

#include "sumclust/constraint.hpp"
#include "sumclust/metric.hpp"

namespace sumclust {

// Brute-force results: per_r_costs[r-1] is the optimal cost using at most r
// clusters (or balls), paired with one optimal witness per r. Deliberately
// naive; independence from the main solvers is the point.
struct MsdOracleResult {
  std::vector<Cost> per_r_costs;
  std::vector<Clustering> witnesses;
};

struct MsrOracleResult {
  std::vector<Cost> per_r_costs;
  std::vector<BallCover> witnesses;
};

// Enumerates all set partitions of S (restricted growth strings, at most t
// parts); with a constraint, infeasible partitions cost +inf. Guard:
// |S| <= 12 throws TooLarge.
MsdOracleResult brute_msd(const MetricSpace& space, const PointSubset& S, int t,
                          const Constraint& constraint);

// Enumerates all <= t element subsets of the candidate balls
// {Ball(p, r): p in centers, r in {d(p,q): q in S} u {0}} whose union covers
// S. Guard: |S| <= 10 and t <= 3 throw TooLarge.
MsrOracleResult brute_msr(const MetricSpace& space, const PointSubset& S, int t,
                          const PointSubset& centers);

}  // namespace sumclust
