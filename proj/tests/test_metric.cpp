#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "sumclust/errors.hpp"

using namespace sumclust;

TEST_CASE("validate_metric accepts a two-point metric") {
  const MetricSpace s = validate_metric(2, {0, 1, 1, 0});
  CHECK(s.n == 2);
  CHECK(s.dist(0, 1) == 1);
  CHECK(s.denom == 1);
}

TEST_CASE("validate_metric names the asymmetric pair") {
  try {
    validate_metric(2, {0, 1, 2, 0});
    FAIL("expected AsymmetricDistance");
  } catch (const AsymmetricDistance& e) {
    CHECK(e.i == 0);
    CHECK(e.j == 1);
  }
}

TEST_CASE("validate_metric names the nonzero diagonal index") {
  try {
    validate_metric(2, {0, 1, 1, 3});
    FAIL("expected NonzeroDiagonal");
  } catch (const NonzeroDiagonal& e) {
    CHECK(e.i == 1);
  }
}

TEST_CASE("validate_metric names the violated triple") {
  try {
    validate_metric(3, {0, 1, 5, 1, 0, 1, 5, 1, 0});
    FAIL("expected TriangleViolation");
  } catch (const TriangleViolation& e) {
    CHECK(e.i == 0);
    CHECK(e.j == 2);
    CHECK(e.via == 1);
  }
}

TEST_CASE("validate_metric rejects negative entries and bad shapes") {
  CHECK_THROWS_AS(validate_metric(2, {0, -1, -1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_metric(2, {0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(validate_metric(0, {}), std::invalid_argument);
}

TEST_CASE("diameter_witness on LINE6 and a singleton") {
  const MetricSpace s = fixtures::line6();
  const DiameterWitness w = diameter_witness(s, full_set(6));
  CHECK(w.x == 0);
  CHECK(w.y == 5);
  CHECK(w.diam == 12);

  const DiameterWitness single = diameter_witness(s, make_subset({3}));
  CHECK(single.x == 3);
  CHECK(single.y == 3);
  CHECK(single.diam == 0);

  CHECK_THROWS_AS(diameter_witness(s, PointSubset{}), EmptySubset);
}

TEST_CASE("diameter_witness on a short line") {
  const MetricSpace s = fixtures::line_metric({0, 5, 10});
  const DiameterWitness w = diameter_witness(s, full_set(3));
  CHECK(w.x == 0);
  CHECK(w.y == 2);
  CHECK(w.diam == 10);
}

TEST_CASE("diameter_witness breaks ties lexicographically") {
  // Pairs (0,3) and (1,2) both realize the diameter 5.
  const MetricSpace s = validate_metric(4, {0, 3, 3, 5,   //
                                            3, 0, 5, 3,   //
                                            3, 5, 0, 3,   //
                                            5, 3, 3, 0});
  const DiameterWitness w = diameter_witness(s, full_set(4));
  CHECK(w.x == 0);
  CHECK(w.y == 3);
}

TEST_CASE("cluster_radius picks the best allowed center") {
  const MetricSpace s = fixtures::line6();
  SUBCASE("midpoint forced") {
    const RadiusWitness r = cluster_radius(s, make_subset({0, 1, 2}), full_set(6));
    CHECK(r.center == 1);
    CHECK(r.radius == 1);
  }
  SUBCASE("restricted centers cost more") {
    const RadiusWitness r = cluster_radius(s, make_subset({0, 2}), make_subset({0, 2}));
    CHECK(r.center == 0);
    CHECK(r.radius == 2);
  }
  SUBCASE("singleton with itself") {
    const RadiusWitness r = cluster_radius(s, make_subset({4}), make_subset({4}));
    CHECK(r.center == 4);
    CHECK(r.radius == 0);
  }
  SUBCASE("full set ties resolve to the smaller index") {
    const RadiusWitness r = cluster_radius(s, full_set(6), full_set(6));
    CHECK(r.center == 2);  // max distance 10, tied with index 3
    CHECK(r.radius == 10);
  }
}

TEST_CASE("cluster_radius restricted to S is between the global radius and the diameter") {
  std::mt19937_64 rng(71);
  for (int iter = 0; iter < 50; ++iter) {
    const MetricSpace s = fixtures::random_metric(rng, 7, 1, 40);
    const PointSubset sub = fixtures::random_subset(rng, 7, 1 + static_cast<int>(rng() % 7));
    const RadiusWitness anywhere = cluster_radius(s, sub, full_set(7));
    const RadiusWitness inside = cluster_radius(s, sub, sub);
    CHECK(anywhere.radius <= inside.radius);
    CHECK(inside.radius <= diameter_witness(s, sub).diam);
  }
}

TEST_CASE("msd_cost and msr_cost") {
  const MetricSpace s = fixtures::line6();
  Clustering c;
  c.clusters = {make_subset({0, 1, 2}), make_subset({3, 4, 5})};
  CHECK(msd_cost(s, c) == 4);

  CHECK(msr_cost(BallCover{}) == 0);
  CHECK(msr_cost(BallCover{{Ball{0, 3}, Ball{4, 2}}, true}) == 5);
  CHECK(msr_cost(BallCover::infeasible_cover()) == kInfeasible);
}

TEST_CASE("metric_closure shortens via intermediate points") {
  MetricSpace raw;
  raw.n = 3;
  raw.d = {0, 1, 5, 1, 0, 1, 5, 1, 0};
  const MetricSpace closed = metric_closure(raw);
  CHECK(closed.dist(0, 2) == 2);
  CHECK(closed.dist(0, 1) == 1);
  CHECK(closed.dist(1, 2) == 1);
}

TEST_CASE("metric_closure is idempotent and never raises a distance") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 7);
    MetricSpace raw;
    raw.n = n;
    raw.d.assign(static_cast<std::size_t>(n) * n, 0);
    std::uniform_int_distribution<Weight> pick(0, 30);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const Weight w = pick(rng);
        raw.d[static_cast<std::size_t>(i) * n + j] = w;
        raw.d[static_cast<std::size_t>(j) * n + i] = w;
      }
    const MetricSpace once = metric_closure(raw);
    const MetricSpace twice = metric_closure(once);
    CHECK(once.d == twice.d);
    for (std::size_t e = 0; e < raw.d.size(); ++e) CHECK(once.d[e] <= raw.d[e]);
    CHECK_NOTHROW(validate_metric(n, once.d));
  }
}

TEST_CASE("an already valid metric is unchanged by closure") {
  const MetricSpace s = fixtures::line6();
  CHECK(metric_closure(s).d == s.d);
}

TEST_CASE("ball point sets and coverage") {
  const MetricSpace s = fixtures::line6();
  CHECK(ball_points(s, Ball{0, 2}).indices == std::vector<int>{0, 1, 2});
  CHECK(ball_points(s, Ball{3, 0}).indices == std::vector<int>{3});
  CHECK(subset_in_ball(s, make_subset({1, 4, 5}), Ball{5, 2}).indices == std::vector<int>{4, 5});
  CHECK(covers(s, {Ball{1, 1}, Ball{4, 2}}, full_set(6)));
  // Ball(5,1) reaches only coordinates 11 and 12; coordinate 10 stays bare.
  CHECK_FALSE(covers(s, {Ball{1, 1}, Ball{5, 1}}, full_set(6)));
}

TEST_CASE("zero_distance_groups collapses duplicates") {
  const MetricSpace s = fixtures::line_metric({0, 0, 5, 5, 9});
  const std::vector<PointSubset> groups = zero_distance_groups(s);
  REQUIRE(groups.size() == 3);
  CHECK(groups[0].indices == std::vector<int>{0, 1});
  CHECK(groups[1].indices == std::vector<int>{2, 3});
  CHECK(groups[2].indices == std::vector<int>{4});

  const std::vector<PointSubset> distinct = zero_distance_groups(fixtures::line6());
  CHECK(distinct.size() == 6);
}
