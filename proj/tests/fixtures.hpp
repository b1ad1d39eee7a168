#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "sumclust/metric.hpp"

namespace fixtures {

using namespace sumclust;

inline MetricSpace line_metric(const std::vector<Weight>& coords) {
  const int n = static_cast<int>(coords.size());
  std::vector<Weight> d(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Weight a = coords[i], b = coords[j];
      d[static_cast<std::size_t>(i) * n + j] = a < b ? b - a : a - b;
    }
  return validate_metric(n, std::move(d));
}

// Six points on a line with a wide gap: per-r sum-of-diameter optima
// [12, 4, 3, 2, 1, 0], two-ball cover optimum 2.
inline MetricSpace line6() { return line_metric({0, 1, 2, 10, 11, 12}); }

// Symmetric uniform entries in [lo, hi], closed under shortest paths: a valid
// integer metric for any draw.
inline MetricSpace random_metric(std::mt19937_64& rng, int n, Weight lo, Weight hi) {
  std::uniform_int_distribution<Weight> pick(lo, hi);
  MetricSpace raw;
  raw.n = n;
  raw.d.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Weight w = pick(rng);
      raw.d[static_cast<std::size_t>(i) * n + j] = w;
      raw.d[static_cast<std::size_t>(j) * n + i] = w;
    }
  MetricSpace closed = metric_closure(raw);
  return validate_metric(closed.n, std::move(closed.d));
}

inline PointSubset random_subset(std::mt19937_64& rng, int n, int size) {
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(size));
  return make_subset(std::move(all));
}

}  // namespace fixtures
