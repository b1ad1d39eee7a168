#include "sumclust/oracle.hpp"

#include <functional>
#include <set>
#include <stdexcept>

#include "sumclust/errors.hpp"

namespace sumclust {

namespace {

// Restricted growth strings: labels[i] <= max(labels[0..i-1]) + 1, at most
// `cap` parts. visit receives the label vector and the part count.
void enumerate_rgs(std::size_t count, int cap,
                   const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<int> labels(count, 0);
  std::function<void(std::size_t, int)> step = [&](std::size_t i, int used) {
    if (i == count) {
      visit(labels, used);
      return;
    }
    const int top = std::min(used, cap - 1);
    for (int a = 0; a <= top; ++a) {
      labels[i] = a;
      step(i + 1, std::max(used, a + 1));
    }
  };
  step(0, 0);
}

Clustering clustering_from_labels(const PointSubset& S, const std::vector<int>& labels,
                                  int parts) {
  Clustering c;
  c.clusters.resize(parts);
  for (std::size_t i = 0; i < labels.size(); ++i)
    c.clusters[labels[i]].indices.push_back(S.indices[i]);
  return c;
}

}  // namespace

MsdOracleResult brute_msd(const MetricSpace& space, const PointSubset& S, int t,
                          const Constraint& constraint) {
  if (S.empty()) throw EmptySubset();
  if (t < 1) throw std::invalid_argument("brute_msd needs t >= 1");
  if (S.size() > 12) throw TooLarge("brute_msd guard: |S| <= 12");

  MsdOracleResult result;
  result.per_r_costs.assign(t, kInfeasible);
  result.witnesses.assign(t, Clustering{});

  const int cap = std::min(t, S.size());
  enumerate_rgs(S.indices.size(), cap, [&](const std::vector<int>& labels, int parts) {
    Clustering c = clustering_from_labels(S, labels, parts);
    Cost cost = constrained_cost(space, c, constraint);
    if (cost < result.per_r_costs[parts - 1]) {
      result.per_r_costs[parts - 1] = cost;
      result.witnesses[parts - 1] = std::move(c);
    }
  });

  // entry r is the optimum over partitions with at most r parts
  for (int r = 2; r <= t; ++r)
    if (result.per_r_costs[r - 2] < result.per_r_costs[r - 1]) {
      result.per_r_costs[r - 1] = result.per_r_costs[r - 2];
      result.witnesses[r - 1] = result.witnesses[r - 2];
    }
  return result;
}

MsrOracleResult brute_msr(const MetricSpace& space, const PointSubset& S, int t,
                          const PointSubset& centers) {
  if (S.empty() || centers.empty()) throw EmptySubset();
  if (t < 1) throw std::invalid_argument("brute_msr needs t >= 1");
  if (S.size() > 10 || t > 3) throw TooLarge("brute_msr guard: |S| <= 10 and t <= 3");

  std::vector<Ball> balls;
  for (int c : centers.indices) {
    std::set<Weight> radii{0};
    for (int q : S.indices) radii.insert(space.dist(c, q));
    for (Weight r : radii) balls.push_back(Ball{c, r});
  }

  const std::uint32_t want = (1u << S.indices.size()) - 1;
  std::vector<std::uint32_t> mask(balls.size(), 0);
  for (std::size_t b = 0; b < balls.size(); ++b)
    for (std::size_t i = 0; i < S.indices.size(); ++i)
      if (space.dist(balls[b].center, S.indices[i]) <= balls[b].radius)
        mask[b] |= 1u << i;

  MsrOracleResult result;
  result.per_r_costs.assign(t, kInfeasible);
  result.witnesses.assign(t, BallCover::infeasible_cover());

  std::vector<std::size_t> picked;
  std::function<void(std::size_t, std::uint32_t, Cost)> step = [&](std::size_t start,
                                                                   std::uint32_t covered,
                                                                   Cost cost) {
    if (!picked.empty() && covered == want) {
      const int r = static_cast<int>(picked.size());
      if (cost < result.per_r_costs[r - 1]) {
        result.per_r_costs[r - 1] = cost;
        BallCover cover;
        for (std::size_t b : picked) cover.balls.push_back(balls[b]);
        result.witnesses[r - 1] = std::move(cover);
      }
    }
    if (picked.size() == static_cast<std::size_t>(t)) return;
    for (std::size_t b = start; b < balls.size(); ++b) {
      picked.push_back(b);
      step(b + 1, covered | mask[b], add_cost(cost, balls[b].radius));
      picked.pop_back();
    }
  };
  step(0, 0, 0);

  for (int r = 2; r <= t; ++r)
    if (result.per_r_costs[r - 2] < result.per_r_costs[r - 1]) {
      result.per_r_costs[r - 1] = result.per_r_costs[r - 2];
      result.witnesses[r - 1] = result.witnesses[r - 2];
    }
  return result;
}

}  // namespace sumclust
