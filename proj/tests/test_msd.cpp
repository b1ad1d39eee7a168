#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "sumclust/errors.hpp"
#include "sumclust/msd.hpp"
#include "sumclust/oracle.hpp"

using namespace sumclust;

namespace {

bool is_partition_of(const Clustering& c, const PointSubset& S) {
  std::vector<int> seen;
  for (const PointSubset& cluster : c.clusters) {
    if (cluster.empty()) return false;
    seen.insert(seen.end(), cluster.indices.begin(), cluster.indices.end());
  }
  std::sort(seen.begin(), seen.end());
  return seen == S.indices;
}

void check_entries_valid(const MetricSpace& space, const ClusteringVector& v, const PointSubset& S,
                         const Constraint& constraint) {
  for (int r = 1; r <= v.budget(); ++r) {
    const ScoredClustering& e = v.entry(r);
    if (e.cost == kInfeasible) continue;
    CHECK(static_cast<int>(e.clustering.clusters.size()) <= r);
    CHECK(is_partition_of(e.clustering, S));
    CHECK(e.cost == constrained_cost(space, e.clustering, constraint));
  }
}

}  // namespace

TEST_CASE("recursive splitter argument guards") {
  const MetricSpace s = fixtures::line6();
  std::mt19937_64 rng(1);
  CHECK_THROWS_AS(rec_msd(s, PointSubset{}, 1, rng, Constraint::none()), EmptySubset);
  CHECK_THROWS_AS(rec_msd(s, full_set(6), 0, rng, Constraint::none()), std::invalid_argument);
  CHECK_THROWS_AS(det_rec_msd(s, PointSubset{}, 1, Constraint::none()), EmptySubset);
  CHECK_THROWS_AS(exact_msd(s, full_set(6), -1), std::invalid_argument);
}

TEST_CASE("one cluster is the whole set for every variant") {
  const MetricSpace s = fixtures::line6();
  std::mt19937_64 rng(2);
  CHECK(rec_msd(s, full_set(6), 1, rng, Constraint::none()).entry(1).cost == 12);
  CHECK(det_rec_msd(s, full_set(6), 1, Constraint::none()).entry(1).cost == 12);
  CHECK(exact_msd(s, full_set(6), 1).entry(1).cost == 12);
}

TEST_CASE("a singleton costs zero at any budget") {
  const MetricSpace s = fixtures::line6();
  std::mt19937_64 rng(3);
  const ClusteringVector v = rec_msd(s, make_subset({4}), 3, rng, Constraint::none());
  for (int r = 1; r <= 3; ++r) CHECK(v.entry(r).cost == 0);
}

TEST_CASE("deterministic split on the six-point line") {
  const MetricSpace s = fixtures::line6();
  const ClusteringVector v = det_rec_msd(s, full_set(6), 6, Constraint::none());
  for (int r = 1; r <= 6; ++r)
    CHECK(v.entry(r).cost == std::vector<Cost>{12, 4, 3, 2, 1, 0}[static_cast<std::size_t>(r - 1)]);
  check_entries_valid(s, v, full_set(6), Constraint::none());
}

TEST_CASE("exact recursion on the six-point line") {
  const MetricSpace s = fixtures::line6();
  const ClusteringVector v = exact_msd(s, full_set(6), 6);
  for (int r = 1; r <= 6; ++r)
    CHECK(v.entry(r).cost == std::vector<Cost>{12, 4, 3, 2, 1, 0}[static_cast<std::size_t>(r - 1)]);
  check_entries_valid(s, v, full_set(6), Constraint::none());
}

TEST_CASE("exact recursion matches the partition oracle") {
  std::mt19937_64 rng(404);
  for (int iter = 0; iter < 30; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int t = 1 + static_cast<int>(rng() % std::min(n, 4));
    const MetricSpace s = fixtures::random_metric(rng, n, 0, 25);
    const ClusteringVector v = exact_msd(s, full_set(n), t);
    const MsdOracleResult oracle = brute_msd(s, full_set(n), t, Constraint::none());
    for (int r = 1; r <= t; ++r) {
      CAPTURE(iter);
      CAPTURE(r);
      CHECK(v.entry(r).cost == oracle.per_r_costs[static_cast<std::size_t>(r - 1)]);
    }
  }
}

TEST_CASE("deterministic split matches the exact recursion entrywise") {
  std::mt19937_64 rng(505);
  for (int iter = 0; iter < 30; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int t = 1 + static_cast<int>(rng() % std::min(n, 4));
    const MetricSpace s = fixtures::random_metric(rng, n, 0, 25);
    const ClusteringVector det = det_rec_msd(s, full_set(n), t, Constraint::none());
    const ClusteringVector exact = exact_msd(s, full_set(n), t);
    for (int r = 1; r <= t; ++r) {
      CAPTURE(iter);
      CAPTURE(r);
      CHECK(det.entry(r).cost == exact.entry(r).cost);
    }
    check_entries_valid(s, det, full_set(n), Constraint::none());
  }
}

TEST_CASE("entry costs never increase with the budget") {
  std::mt19937_64 rng(606);
  for (int iter = 0; iter < 15; ++iter) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const MetricSpace s = fixtures::random_metric(rng, n, 1, 20);
    const ClusteringVector det = det_rec_msd(s, full_set(n), n, Constraint::none());
    const ClusteringVector exact = exact_msd(s, full_set(n), n);
    for (int r = 2; r <= n; ++r) {
      CHECK(det.entry(r).cost <= det.entry(r - 1).cost);
      CHECK(exact.entry(r).cost <= exact.entry(r - 1).cost);
    }
  }
}

TEST_CASE("randomized splitter stays within its node budget") {
  std::mt19937_64 metric_rng(707);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = 2 + static_cast<int>(metric_rng() % 8);
    const int t = 1 + static_cast<int>(metric_rng() % 4);
    const MetricSpace s = fixtures::random_metric(metric_rng, n, 0, 30);
    std::mt19937_64 rng(1000 + static_cast<std::uint64_t>(iter));
    MsdStats stats;
    rec_msd(s, full_set(n), t, rng, Constraint::none(), &stats);
    CHECK(stats.nodes <= static_cast<std::uint64_t>(2 * n - 1));
  }
}

TEST_CASE("exact recursion stays within its node budget") {
  std::mt19937_64 rng(808);
  for (int iter = 0; iter < 20; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int t = 1 + static_cast<int>(rng() % 3);
    const MetricSpace s = fixtures::random_metric(rng, n, 0, 30);
    MsdStats stats;
    exact_msd(s, full_set(n), t, &stats);
    std::uint64_t bound = 1;
    for (int i = 0; i < t; ++i) bound *= static_cast<std::uint64_t>(n);
    CHECK(stats.nodes <= bound);
  }
}

TEST_CASE("constrained deterministic split matches the constrained oracle") {
  const MetricSpace s = fixtures::line6();
  const Constraint min2 = Constraint::min_cluster_size(2);
  const ClusteringVector v = det_rec_msd(s, full_set(6), 3, min2);
  CHECK(v.entry(3).cost == 4);
  check_entries_valid(s, v, full_set(6), min2);

  std::mt19937_64 rng(909);
  for (int iter = 0; iter < 15; ++iter) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const int t = 1 + static_cast<int>(rng() % 3);
    const MetricSpace space = fixtures::random_metric(rng, n, 1, 20);
    Constraint c = Constraint::min_cluster_size(2);
    if (iter % 3 == 0) {
      std::vector<int> colors(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) colors[static_cast<std::size_t>(i)] = i % 2;
      c = Constraint::exact_fairness(colors, {1, 1});
    }
    const ClusteringVector det = det_rec_msd(space, full_set(n), t, c);
    const MsdOracleResult oracle = brute_msd(space, full_set(n), t, c);
    for (int r = 1; r <= t; ++r) {
      CAPTURE(iter);
      CAPTURE(r);
      CHECK(det.entry(r).cost == oracle.per_r_costs[static_cast<std::size_t>(r - 1)]);
    }
    check_entries_valid(space, det, full_set(n), c);
  }
}

TEST_CASE("randomized entries are valid clusterings") {
  std::mt19937_64 rng(111);
  for (int iter = 0; iter < 10; ++iter) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const MetricSpace s = fixtures::random_metric(rng, n, 0, 20);
    std::mt19937_64 run_rng(50 + static_cast<std::uint64_t>(iter));
    const Constraint c =
        (iter % 2 == 0) ? Constraint::none() : Constraint::min_cluster_size(2);
    const ClusteringVector v = rec_msd(s, full_set(n), std::min(n, 4), run_rng, c);
    check_entries_valid(s, v, full_set(n), c);
  }
}

TEST_CASE("solver front end: exact mode on the six-point line") {
  MsdSolveOptions opt;
  opt.k = 2;
  opt.mode = MsdMode::Exact;
  const MsdSolveResult r = solve_msd(fixtures::line6(), opt);
  CHECK(r.cost == 4);
  CHECK(is_partition_of(r.clustering, full_set(6)));
  CHECK(r.nodes > 0);
}

TEST_CASE("solver front end: one cluster per point is free") {
  MsdSolveOptions opt;
  opt.k = 6;
  opt.mode = MsdMode::Exact;
  const MsdSolveResult r = solve_msd(fixtures::line6(), opt);
  CHECK(r.cost == 0);
  CHECK(r.clustering.clusters.size() == 6);
  CHECK(r.zero_shortcut);
}

TEST_CASE("solver front end: duplicate points trigger the zero shortcut") {
  const MetricSpace s = fixtures::line_metric({0, 0, 5, 5});
  MsdSolveOptions opt;
  opt.k = 2;
  opt.mode = MsdMode::Det;
  const MsdSolveResult r = solve_msd(s, opt);
  CHECK(r.cost == 0);
  CHECK(r.zero_shortcut);
  CHECK(r.clustering.clusters.size() == 2);
}

TEST_CASE("solver front end: randomized mode finds the line optimum") {
  MsdSolveOptions opt;
  opt.k = 2;
  opt.eps_num = 1;
  opt.eps_den = 2;
  opt.mode = MsdMode::Rand;
  opt.seed = 42;
  opt.reps_multiplier = 8;
  const MsdSolveResult r = solve_msd(fixtures::line6(), opt);
  CHECK(r.runs == 64);  // ceil(2^2 ln 6) = 8, times the multiplier
  CHECK(r.cost == 4);
}

TEST_CASE("solver front end: deterministic mode is near-exact after scaling") {
  std::mt19937_64 rng(222);
  for (int iter = 0; iter < 12; ++iter) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const int k = 1 + static_cast<int>(rng() % 3);
    const MetricSpace s = fixtures::random_metric(rng, n, 1, 25);
    MsdSolveOptions opt;
    opt.k = k;
    opt.eps_num = 1;
    opt.eps_den = 2;
    opt.mode = MsdMode::Det;
    const MsdSolveResult r = solve_msd(s, opt);
    const Cost best = brute_msd(s, full_set(n), k, Constraint::none())
                          .per_r_costs[static_cast<std::size_t>(k - 1)];
    CAPTURE(iter);
    CHECK(r.cost >= best);
    // cost <= (1 + eps) * opt, checked in integers: 2*cost <= 3*opt.
    CHECK(r.cost * opt.eps_den <= best * (opt.eps_den + opt.eps_num));
    // k = n trips the zero-cost shortcut before any estimate is consulted.
    if (!r.zero_shortcut) CHECK(r.estimates_tried >= 1);
  }
}

TEST_CASE("solver front end: constraint handling") {
  const MetricSpace s = fixtures::line6();
  MsdSolveOptions opt;
  opt.k = 2;
  opt.mode = MsdMode::Det;
  opt.constraint = Constraint::min_cluster_size(7);
  CHECK_THROWS_AS(solve_msd(s, opt), InfeasibleConstraint);

  opt.constraint = Constraint::min_cluster_size(3);
  const MsdSolveResult r = solve_msd(s, opt);
  CHECK(r.cost == 4);

  opt.mode = MsdMode::Exact;
  CHECK_THROWS_AS(solve_msd(s, opt), std::invalid_argument);
}

TEST_CASE("solver front end rejects bad arguments") {
  MsdSolveOptions opt;
  opt.k = 0;
  CHECK_THROWS_AS(solve_msd(fixtures::line6(), opt), std::invalid_argument);
  opt.k = 7;
  CHECK_THROWS_AS(solve_msd(fixtures::line6(), opt), std::invalid_argument);
  opt.k = 2;
  opt.eps_num = 3;
  opt.eps_den = 2;
  CHECK_THROWS_AS(solve_msd(fixtures::line6(), opt), std::invalid_argument);
}
