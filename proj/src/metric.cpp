#include "sumclust/metric.hpp"

#include <algorithm>
#include <stdexcept>

#include "sumclust/errors.hpp"

namespace sumclust {

PointSubset make_subset(std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return PointSubset{std::move(indices)};
}

PointSubset full_set(int n) {
  PointSubset s;
  s.indices.resize(n);
  for (int i = 0; i < n; ++i) s.indices[i] = i;
  return s;
}

PointSubset set_union(const PointSubset& a, const PointSubset& b) {
  PointSubset out;
  out.indices.reserve(a.indices.size() + b.indices.size());
  std::set_union(a.indices.begin(), a.indices.end(), b.indices.begin(), b.indices.end(),
                 std::back_inserter(out.indices));
  return out;
}

PointSubset set_intersection(const PointSubset& a, const PointSubset& b) {
  PointSubset out;
  std::set_intersection(a.indices.begin(), a.indices.end(), b.indices.begin(), b.indices.end(),
                        std::back_inserter(out.indices));
  return out;
}

PointSubset set_difference(const PointSubset& a, const PointSubset& b) {
  PointSubset out;
  std::set_difference(a.indices.begin(), a.indices.end(), b.indices.begin(), b.indices.end(),
                      std::back_inserter(out.indices));
  return out;
}

MetricSpace validate_metric(int n, std::vector<Weight> dist, std::uint64_t denom) {
  if (n < 1) throw std::invalid_argument("metric needs at least one point");
  if (dist.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("distance matrix is not n x n");
  MetricSpace space{n, denom, std::move(dist)};
  for (int i = 0; i < n; ++i) {
    if (space.dist(i, i) != 0) throw NonzeroDiagonal(i);
    for (int j = 0; j < n; ++j) {
      if (space.dist(i, j) < 0) throw std::invalid_argument("negative distance entry");
      if (space.dist(i, j) != space.dist(j, i)) throw AsymmetricDistance(std::min(i, j), std::max(i, j));
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m) {
        if (m == i || m == j || i == j) continue;
        if (space.dist(i, j) > space.dist(i, m) + space.dist(m, j))
          throw TriangleViolation(i, j, m);
      }
  return space;
}

DiameterWitness diameter_witness(const MetricSpace& space, const PointSubset& S) {
  if (S.empty()) throw EmptySubset();
  DiameterWitness w{S.indices[0], S.indices[0], 0};
  for (std::size_t a = 0; a < S.indices.size(); ++a)
    for (std::size_t b = a + 1; b < S.indices.size(); ++b) {
      Weight d = space.dist(S.indices[a], S.indices[b]);
      if (d > w.diam) w = DiameterWitness{S.indices[a], S.indices[b], d};
    }
  return w;
}

RadiusWitness cluster_radius(const MetricSpace& space, const PointSubset& S,
                             const PointSubset& centers) {
  if (S.empty() || centers.empty()) throw EmptySubset();
  RadiusWitness best{centers.indices[0], 0};
  bool first = true;
  for (int c : centers.indices) {
    Weight r = 0;
    for (int q : S.indices) r = std::max(r, space.dist(c, q));
    if (first || r < best.radius) {
      best = RadiusWitness{c, r};
      first = false;
    }
  }
  return best;
}

Cost msd_cost(const MetricSpace& space, const Clustering& c) {
  Cost total = 0;
  for (const PointSubset& cluster : c.clusters) {
    Weight diam = 0;
    for (std::size_t a = 0; a < cluster.indices.size(); ++a)
      for (std::size_t b = a + 1; b < cluster.indices.size(); ++b)
        diam = std::max(diam, space.dist(cluster.indices[a], cluster.indices[b]));
    total = add_cost(total, diam);
  }
  return total;
}

Cost msr_cost(const BallCover& b) {
  if (!b.feasible) return kInfeasible;
  Cost total = 0;
  for (const Ball& ball : b.balls) total = add_cost(total, ball.radius);
  return total;
}

MetricSpace metric_closure(const MetricSpace& space) {
  MetricSpace out = space;
  const int n = out.n;
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Weight via = out.dist(i, m) + out.dist(m, j);
        if (via < out.dist(i, j)) out.d[static_cast<std::size_t>(i) * n + j] = via;
      }
  return out;
}

PointSubset ball_points(const MetricSpace& space, const Ball& ball) {
  PointSubset out;
  for (int p = 0; p < space.n; ++p)
    if (space.dist(ball.center, p) <= ball.radius) out.indices.push_back(p);
  return out;
}

PointSubset subset_in_ball(const MetricSpace& space, const PointSubset& S, const Ball& ball) {
  PointSubset out;
  for (int p : S.indices)
    if (space.dist(ball.center, p) <= ball.radius) out.indices.push_back(p);
  return out;
}

bool covers(const MetricSpace& space, const std::vector<Ball>& balls, const PointSubset& S) {
  for (int p : S.indices) {
    bool hit = false;
    for (const Ball& b : balls)
      if (space.dist(b.center, p) <= b.radius) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

std::vector<PointSubset> zero_distance_groups(const MetricSpace& space) {
  std::vector<PointSubset> groups;
  std::vector<bool> seen(space.n, false);
  for (int i = 0; i < space.n; ++i) {
    if (seen[i]) continue;
    PointSubset group;
    for (int j = i; j < space.n; ++j)
      if (!seen[j] && space.dist(i, j) == 0) {
        group.indices.push_back(j);
        seen[j] = true;
      }
    groups.push_back(std::move(group));
  }
  return groups;
}

}  // namespace sumclust
