#pragma once

#include <vector>

#include "sumclust/metric.hpp"

namespace sumclust {

struct ScoredClustering {
  Clustering clustering;
  Cost cost = kInfeasible;
};

// entries[r-1] holds the best clustering found that uses at most r clusters.
struct ClusteringVector {
  std::vector<ScoredClustering> entries;

  int budget() const { return static_cast<int>(entries.size()); }
  const ScoredClustering& entry(int r) const { return entries[r - 1]; }
  ScoredClustering& entry(int r) { return entries[r - 1]; }
};

// (min,+) convolution: result[i+j] = cheapest of base[i+j] and A_i u B_j over
// all i + j <= t. A and B must cluster disjoint subsets, so union costs add
// (kInfeasible absorbs); entry costs carry the caller's cost function. Ties
// keep the earlier-constructed clustering.
ClusteringVector min_plus_merge(const ClusteringVector& A, const ClusteringVector& B, int t,
                                ClusteringVector base);

}  // namespace sumclust
