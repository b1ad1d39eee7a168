#include "sumclust/minplus.hpp"

namespace sumclust {

namespace {

Clustering concat(const Clustering& a, const Clustering& b) {
  Clustering out = a;
  out.clusters.insert(out.clusters.end(), b.clusters.begin(), b.clusters.end());
  return out;
}

}  // namespace

ClusteringVector min_plus_merge(const ClusteringVector& A, const ClusteringVector& B, int t,
                                ClusteringVector base) {
  for (int i = 1; i <= A.budget(); ++i) {
    for (int j = 1; j <= B.budget() && i + j <= t; ++j) {
      Cost c = add_cost(A.entry(i).cost, B.entry(j).cost);
      ScoredClustering& slot = base.entry(i + j);
      if (c < slot.cost) {
        slot.cost = c;
        slot.clustering = concat(A.entry(i).clustering, B.entry(j).clustering);
      }
    }
  }
  return base;
}

}  // namespace sumclust
