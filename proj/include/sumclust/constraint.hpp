#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sumclust/metric.hpp"

namespace sumclust {

// Per-cluster feasibility predicate closed under disjoint union: if two
// disjoint subsets are feasible, so is their union.
class Constraint {
 public:
  enum class Kind { None, MinClusterSize, ExactFairness, Custom };

  static Constraint none() { return Constraint{}; }
  static Constraint min_cluster_size(long long m);
  // colors[p] in [0, ratios.size()); a cluster is feasible iff its color
  // counts are exactly proportional to ratios.
  static Constraint exact_fairness(std::vector<int> colors, std::vector<long long> ratios);
  static Constraint custom(std::function<bool(const PointSubset&)> predicate);

  Kind kind() const { return kind_; }
  bool is_none() const { return kind_ == Kind::None; }
  bool feasible(const PointSubset& cluster) const;

  long long min_size() const { return min_size_; }
  const std::vector<int>& colors() const { return colors_; }
  const std::vector<long long>& ratios() const { return ratios_; }

 private:
  Kind kind_ = Kind::None;
  long long min_size_ = 0;
  std::vector<int> colors_;
  std::vector<long long> ratios_;
  std::function<bool(const PointSubset&)> predicate_;
};

// diam(S) when S satisfies the constraint, kInfeasible otherwise.
Cost constrained_cluster_cost(const MetricSpace& space, const PointSubset& S,
                              const Constraint& constraint);
Cost constrained_cost(const MetricSpace& space, const Clustering& c, const Constraint& constraint);

struct MergeabilityReport {
  bool proven = false;  // built-in kinds carry a proof and skip sampling
  int trials_run = 0;
};

// Built-ins return proven immediately. Custom predicates are sampled: random
// disjoint feasible pairs must have feasible unions; a counterexample throws
// NotMergeable carrying the witness pair.
MergeabilityReport check_mergeable(const Constraint& constraint, const MetricSpace& space,
                                   int trials, std::uint64_t seed);

}  // namespace sumclust
