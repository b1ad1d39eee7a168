#include "sumclust/constraint.hpp"

#include <random>
#include <stdexcept>

#include "sumclust/errors.hpp"

namespace sumclust {

Constraint Constraint::min_cluster_size(long long m) {
  if (m < 1) throw std::invalid_argument("min_cluster_size needs m >= 1");
  Constraint c;
  c.kind_ = Kind::MinClusterSize;
  c.min_size_ = m;
  return c;
}

Constraint Constraint::exact_fairness(std::vector<int> colors, std::vector<long long> ratios) {
  if (ratios.empty()) throw std::invalid_argument("exact_fairness needs at least one ratio");
  long long sum = 0;
  for (long long r : ratios) {
    if (r <= 0) throw std::invalid_argument("exact_fairness ratios must be positive");
    sum += r;
  }
  for (int c : colors)
    if (c < 0 || c >= static_cast<int>(ratios.size()))
      throw std::invalid_argument("exact_fairness color out of range");
  Constraint c;
  c.kind_ = Kind::ExactFairness;
  c.colors_ = std::move(colors);
  c.ratios_ = std::move(ratios);
  c.min_size_ = sum;  // cached ratio sum
  return c;
}

Constraint Constraint::custom(std::function<bool(const PointSubset&)> predicate) {
  Constraint c;
  c.kind_ = Kind::Custom;
  c.predicate_ = std::move(predicate);
  return c;
}

bool Constraint::feasible(const PointSubset& cluster) const {
  switch (kind_) {
    case Kind::None:
      return true;
    case Kind::MinClusterSize:
      return cluster.size() >= min_size_;
    case Kind::ExactFairness: {
      // count_c * sum(ratios) == |cluster| * ratio_c for every color c
      std::vector<long long> counts(ratios_.size(), 0);
      for (int p : cluster.indices) {
        if (p < 0 || p >= static_cast<int>(colors_.size())) return false;
        ++counts[colors_[p]];
      }
      const long long size = cluster.size();
      for (std::size_t c = 0; c < ratios_.size(); ++c)
        if (counts[c] * min_size_ != size * ratios_[c]) return false;
      return true;
    }
    case Kind::Custom:
      return predicate_(cluster);
  }
  return true;
}

Cost constrained_cluster_cost(const MetricSpace& space, const PointSubset& S,
                              const Constraint& constraint) {
  if (!constraint.feasible(S)) return kInfeasible;
  Weight diam = 0;
  for (std::size_t a = 0; a < S.indices.size(); ++a)
    for (std::size_t b = a + 1; b < S.indices.size(); ++b)
      diam = std::max(diam, space.dist(S.indices[a], S.indices[b]));
  return diam;
}

Cost constrained_cost(const MetricSpace& space, const Clustering& c, const Constraint& constraint) {
  Cost total = 0;
  for (const PointSubset& cluster : c.clusters)
    total = add_cost(total, constrained_cluster_cost(space, cluster, constraint));
  return total;
}

MergeabilityReport check_mergeable(const Constraint& constraint, const MetricSpace& space,
                                   int trials, std::uint64_t seed) {
  if (constraint.kind() != Constraint::Kind::Custom) return MergeabilityReport{true, 0};

  std::mt19937_64 rng(seed);
  int run = 0;
  for (int trial = 0; trial < trials; ++trial) {
    // Random 3-coloring of the points: two disjoint candidate subsets.
    PointSubset a, b;
    for (int p = 0; p < space.n; ++p) {
      switch (rng() % 3) {
        case 0: a.indices.push_back(p); break;
        case 1: b.indices.push_back(p); break;
        default: break;
      }
    }
    if (a.empty() || b.empty()) continue;
    ++run;
    if (constraint.feasible(a) && constraint.feasible(b) &&
        !constraint.feasible(set_union(a, b)))
      throw NotMergeable(std::move(a), std::move(b));
  }
  return MergeabilityReport{false, run};
}

}  // namespace sumclust
