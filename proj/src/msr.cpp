#include "sumclust/msr.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "sumclust/errors.hpp"

namespace sumclust {

namespace {

bool subset_of(const PointSubset& a, const PointSubset& b) {
  return std::includes(b.indices.begin(), b.indices.end(), a.indices.begin(), a.indices.end());
}

bool intersects(const PointSubset& a, const PointSubset& b) {
  auto i = a.indices.begin();
  auto j = b.indices.begin();
  while (i != a.indices.end() && j != b.indices.end()) {
    if (*i == *j) return true;
    (*i < *j) ? ++i : ++j;
  }
  return false;
}

// Every non-negative integer tuple of the given length with sum <= budget,
// first coordinate fastest. Zero length yields the single empty tuple.
template <typename Fn>
void for_each_radius_tuple(int length, Weight budget, Fn&& fn) {
  std::vector<Weight> r(static_cast<std::size_t>(length), 0);
  Weight sum = 0;
  for (;;) {
    fn(static_cast<const std::vector<Weight>&>(r));
    int i = 0;
    for (; i < length; ++i) {
      ++r[i];
      ++sum;
      if (sum <= budget) break;
      sum -= r[i];
      r[i] = 0;
    }
    if (i == length) return;
  }
}

struct Ctx {
  const MetricSpace& space;
  const AlgorithmParams& params;
  MsrStats* stats;
  bool memoize;
  bool v2;
  std::map<std::tuple<std::vector<int>, int, int>, BallCover> memo;
};

// Cheapest-so-far pool; ties keep the first solution considered.
struct Best {
  BallCover cover = BallCover::infeasible_cover();
  Cost cost = kInfeasible;

  void consider(BallCover c, MsrStats* stats) {
    if (!c.feasible) return;
    if (stats) ++stats->tee_entries;
    const Cost cc = msr_cost(c);
    if (cc < cost) {
      cost = cc;
      cover = std::move(c);
    }
  }
};

BallCover concat_covers(std::vector<Ball> head, const BallCover& a, const BallCover& b) {
  head.insert(head.end(), a.balls.begin(), a.balls.end());
  head.insert(head.end(), b.balls.begin(), b.balls.end());
  return BallCover{std::move(head), true};
}

BallCover solve_node(Ctx& ctx, const PointSubset& S, int t, int level);
BallCover guess_node(Ctx& ctx, const PointSubset& S, int t, int level);

BallCover rec_msr_impl(Ctx& ctx, const PointSubset& S, int t, int level) {
  const std::vector<DefensiveCandidate> candidates =
      candidate_clusterings(ctx.space, S, t, ctx.params);
  if (ctx.stats) ctx.stats->candidates_enumerated += candidates.size();
  Best best;
  for (const DefensiveCandidate& cand : candidates)
    best.consider(BallCover{cand.balls, true}, ctx.stats);
  if (level >= ctx.params.level_cap) return best.cover;

  for (const DefensiveCandidate& cand : candidates) {
    // (a) one candidate center carries a guessed ball; the rest of S keeps
    // the full remaining budget at the same level.
    for (const Ball& b : cand.balls) {
      for (Weight rp = 0; rp <= ctx.params.radius_budget; ++rp) {
        const Ball guessed{b.center, rp};
        const PointSubset rest = set_difference(S, ball_points(ctx.space, guessed));
        const BallCover sub = solve_node(ctx, rest, t - 1, level);
        if (!sub.feasible) continue;
        best.consider(concat_covers({guessed}, sub, BallCover{}), ctx.stats);
      }
    }

    // (b) split around the expanded ball: boundary radii are guessed, the
    // outside keeps this level, the inside moves one level down.
    const ExpansionResult exp = expanded_ball(ctx.space, S, cand, ctx.params);
    const PointSubset in_e = set_intersection(S, ball_points(ctx.space, exp.expanded));
    const PointSubset out_e = set_difference(S, ball_points(ctx.space, exp.expanded));
    const int bsz = static_cast<int>(exp.boundary.size());
    for_each_radius_tuple(bsz, ctx.params.radius_budget, [&](const std::vector<Weight>& rt) {
      std::vector<Ball> bballs;
      bballs.reserve(bsz);
      PointSubset covered;
      for (int i = 0; i < bsz; ++i) {
        bballs.push_back(Ball{cand.balls[exp.boundary[i]].center, rt[i]});
        covered = set_union(covered, ball_points(ctx.space, bballs.back()));
      }
      const PointSubset s_out = set_difference(out_e, covered);
      const PointSubset s_in = set_difference(in_e, covered);
      const BallCover out = solve_node(ctx, s_out, exp.k_out, level);
      if (!out.feasible) return;
      const BallCover in = guess_node(ctx, s_in, exp.k_in, level + 1);
      if (!in.feasible) return;
      best.consider(concat_covers(bballs, out, in), ctx.stats);
    });
  }
  return best.cover;
}

BallCover rec_msr2_impl(Ctx& ctx, const PointSubset& S, int t, int level) {
  const std::vector<DefensiveCandidate> candidates =
      candidate_clusterings(ctx.space, S, t, ctx.params);
  if (ctx.stats) ctx.stats->candidates_enumerated += candidates.size();
  Best best;
  for (const DefensiveCandidate& cand : candidates)
    best.consider(BallCover{cand.balls, true}, ctx.stats);
  if (level >= ctx.params.level_cap) return best.cover;

  for (const DefensiveCandidate& cand : candidates) {
    const int tp = static_cast<int>(cand.balls.size());
    for (unsigned mask = 0; mask < (1u << tp); ++mask) {
      std::vector<int> good;
      for (int j = 0; j < tp; ++j)
        if (mask & (1u << j)) good.push_back(j);
      const TemporarySubproblems tmp =
          get_temporary_subproblems(ctx.space, S, cand, good, ctx.params);
      const int nc = static_cast<int>(tmp.chosen.size());
      for_each_radius_tuple(nc, ctx.params.radius_budget, [&](const std::vector<Weight>& rt) {
        std::vector<Ball> balls;
        balls.reserve(nc);
        PointSubset covered;
        for (int i = 0; i < nc; ++i) {
          balls.push_back(Ball{cand.balls[tmp.chosen[i]].center, rt[i]});
          covered = set_union(covered, ball_points(ctx.space, balls.back()));
        }
        for (const TemporarySubproblem& sp : tmp.subproblems) {
          const PointSubset pruned = set_difference(sp.points, covered);
          const BallCover sub = guess_node(ctx, pruned, sp.budget, level + 1);
          if (!sub.feasible) return;
          balls.insert(balls.end(), sub.balls.begin(), sub.balls.end());
        }
        // Guessed radii below the candidate's own can strand points that the
        // subproblem construction pruned; only covering assemblies count.
        if (!covers(ctx.space, balls, S)) return;
        best.consider(BallCover{std::move(balls), true}, ctx.stats);
      });
    }
  }
  return best.cover;
}

BallCover solve_node(Ctx& ctx, const PointSubset& S, int t, int level) {
  if (S.empty()) return BallCover{};
  if (t <= 0) return BallCover::infeasible_cover();
  if (ctx.stats) ctx.stats->count_node(level);
  const auto key = std::make_tuple(S.indices, t, level);
  if (ctx.memoize) {
    const auto it = ctx.memo.find(key);
    if (it != ctx.memo.end()) {
      if (ctx.stats) ++ctx.stats->memo_hits;
      return it->second;
    }
  }
  BallCover result = ctx.v2 ? rec_msr2_impl(ctx, S, t, level) : rec_msr_impl(ctx, S, t, level);
  if (ctx.memoize) ctx.memo.emplace(key, result);
  return result;
}

BallCover guess_node(Ctx& ctx, const PointSubset& S, int t, int level) {
  if (S.empty()) return BallCover{};
  if (t <= 0) return BallCover::infeasible_cover();
  const int m = std::min(t, ctx.params.guess_count);

  // Ball universe: centers in S, radii the distances to any point of X.
  std::vector<Ball> universe;
  for (const int p : S.indices) {
    std::vector<Weight> radii;
    radii.reserve(ctx.space.n);
    for (int q = 0; q < ctx.space.n; ++q) radii.push_back(ctx.space.dist(p, q));
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
    for (const Weight r : radii) universe.push_back(Ball{p, r});
  }

  Best best;
  std::vector<int> idx(static_cast<std::size_t>(m), 0);  // non-decreasing multiset
  for (;;) {
    if (ctx.stats) ++ctx.stats->guess_tuples;
    std::vector<Ball> balls;
    balls.reserve(m);
    PointSubset covered;
    for (const int i : idx) {
      balls.push_back(universe[i]);
      covered = set_union(covered, ball_points(ctx.space, universe[i]));
    }
    const BallCover sub = solve_node(ctx, set_difference(S, covered), t - m, level);
    if (sub.feasible) best.consider(concat_covers(std::move(balls), sub, BallCover{}), ctx.stats);

    int pos = m - 1;
    while (pos >= 0 && idx[pos] == static_cast<int>(universe.size()) - 1) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < m; ++j) idx[j] = idx[pos];
  }
  return best.cover;
}

}  // namespace

std::vector<DefensiveCandidate> candidate_clusterings(const MetricSpace& space,
                                                      const PointSubset& S, int t,
                                                      const AlgorithmParams& params) {
  if (S.empty()) throw EmptySubset();
  if (t < 1) throw std::invalid_argument("candidate_clusterings needs t >= 1");
  std::vector<DefensiveCandidate> out;
  for (int tp = 1; tp <= t; ++tp) {
    for_each_radius_tuple(tp, params.defensive_budget, [&](const std::vector<Weight>& rt) {
      // Forced sequence: each center is the least point of S the earlier
      // balls leave uncovered; tuples whose prefix already covers S die.
      std::vector<Ball> balls;
      balls.reserve(tp);
      PointSubset covered;
      for (int i = 0; i < tp; ++i) {
        int c = -1;
        for (const int p : S.indices)
          if (!std::binary_search(covered.indices.begin(), covered.indices.end(), p)) {
            c = p;
            break;
          }
        if (c < 0) return;
        balls.push_back(Ball{c, rt[i]});
        covered = set_union(covered, ball_points(space, balls.back()));
      }
      if (!subset_of(S, covered)) return;
      // counts: one tuple per way to give every ball k_j >= 1 with sum <= t
      for_each_radius_tuple(tp, t - tp, [&](const std::vector<Weight>& extra) {
        std::vector<int> counts(tp);
        for (int i = 0; i < tp; ++i) counts[i] = 1 + static_cast<int>(extra[i]);
        out.push_back(DefensiveCandidate{balls, std::move(counts)});
      });
    });
  }
  return out;
}

ExpansionResult expanded_ball(const MetricSpace& space, const PointSubset&,
                              const DefensiveCandidate& candidate,
                              const AlgorithmParams& params) {
  const std::vector<Ball>& balls = candidate.balls;
  if (balls.empty()) throw std::invalid_argument("expanded_ball needs a nonempty candidate");
  int seed = 0;
  for (std::size_t j = 0; j < balls.size(); ++j)
    if (balls[j].radius > 0) {
      seed = static_cast<int>(j);
      break;
    }

  std::vector<PointSubset> points(balls.size());
  for (std::size_t j = 0; j < balls.size(); ++j) points[j] = ball_points(space, balls[j]);

  ExpansionResult res;
  res.expanded = balls[seed];
  const long long num = params.eps_num, den = params.eps_den;
  for (;;) {
    const PointSubset pe = ball_points(space, res.expanded);
    res.inside.clear();
    res.boundary.clear();
    for (std::size_t j = 0; j < balls.size(); ++j) {
      if (subset_of(points[j], pe))
        res.inside.push_back(static_cast<int>(j));
      else if (intersects(points[j], pe))
        res.boundary.push_back(static_cast<int>(j));
    }
    if (res.boundary.empty()) break;
    Weight r_max = 0, r_sum = 0;
    for (const int j : res.boundary) {
      r_max = std::max(r_max, balls[j].radius);
      r_sum += balls[j].radius;
    }
    // Expand while the boundary is cheap relative to its largest ball or the
    // largest ball is big relative to E: eps^2 * r(E) <= r_max, exactly.
    const bool cheap = r_sum >= 8 * r_max;
    const bool large = static_cast<__int128>(r_max) * den * den >=
                       static_cast<__int128>(num) * num * res.expanded.radius;
    if (!cheap && !large) break;
    res.expanded.radius += 2 * r_max;
    ++res.expansions;
  }

  res.k_in = res.k_out = 0;
  std::size_t bi = 0;
  for (std::size_t j = 0; j < balls.size(); ++j) {
    if (std::binary_search(res.inside.begin(), res.inside.end(), static_cast<int>(j)))
      res.k_in += candidate.counts[j];
    else if (bi < res.boundary.size() && res.boundary[bi] == static_cast<int>(j))
      ++bi;
    else
      res.k_out += candidate.counts[j];
  }
  return res;
}

TemporarySubproblems get_temporary_subproblems(const MetricSpace& space, const PointSubset& S,
                                               const DefensiveCandidate& candidate,
                                               const std::vector<int>& good,
                                               const AlgorithmParams& params) {
  const std::vector<Ball>& balls = candidate.balls;
  const int tp = static_cast<int>(balls.size());
  std::vector<PointSubset> points(balls.size());
  for (int j = 0; j < tp; ++j) points[j] = ball_points(space, balls[j]);

  std::vector<bool> available(balls.size(), true);
  for (const int j : good) available[j] = false;

  TemporarySubproblems res;
  res.chosen = good;
  std::vector<PointSubset> earlier;  // point sets of finished expanded balls
  const long long num = params.eps_num, den = params.eps_den;

  for (;;) {
    int seed = -1;
    for (int j = 0; j < tp; ++j)
      if (available[j] && balls[j].radius > 0) {
        seed = j;
        break;
      }
    if (seed < 0) break;

    // Expansion identical to expanded_ball but restricted to available balls.
    Ball e = balls[seed];
    std::vector<int> inside, boundary;
    for (;;) {
      const PointSubset pe = ball_points(space, e);
      inside.clear();
      boundary.clear();
      for (int j = 0; j < tp; ++j) {
        if (!available[j]) continue;
        if (subset_of(points[j], pe))
          inside.push_back(j);
        else if (intersects(points[j], pe))
          boundary.push_back(j);
      }
      if (boundary.empty()) break;
      Weight r_max = 0, r_sum = 0;
      for (const int j : boundary) {
        r_max = std::max(r_max, balls[j].radius);
        r_sum += balls[j].radius;
      }
      const bool cheap = r_sum >= 8 * r_max;
      const bool large = static_cast<__int128>(r_max) * den * den >=
                         static_cast<__int128>(num) * num * e.radius;
      if (!cheap && !large) break;
      e.radius += 2 * r_max;
    }

    res.chosen.insert(res.chosen.end(), boundary.begin(), boundary.end());

    TemporarySubproblem sp;
    sp.expanded = e;
    for (const int j : inside) sp.budget += candidate.counts[j];
    sp.points = set_intersection(S, ball_points(space, e));
    for (const int c : res.chosen) sp.points = set_difference(sp.points, points[c]);
    for (const PointSubset& q : earlier) sp.points = set_difference(sp.points, q);
    earlier.push_back(ball_points(space, e));
    res.subproblems.push_back(std::move(sp));

    for (const int j : inside) available[j] = false;
    for (const int j : boundary) available[j] = false;
  }

  // Leftover zero-radius balls are disjoint from every expanded region and
  // must be guessed directly.
  for (int j = 0; j < tp; ++j)
    if (available[j]) res.chosen.push_back(j);
  std::sort(res.chosen.begin(), res.chosen.end());
  return res;
}

BallCover rec_msr(const MetricSpace& space, const PointSubset& S, int t, int level,
                  const AlgorithmParams& params, MsrStats* stats, bool memoize) {
  Ctx ctx{space, params, stats, memoize, /*v2=*/false, {}};
  return solve_node(ctx, S, t, level);
}

BallCover guess_and_solve_msr(const MetricSpace& space, const PointSubset& S, int t, int level,
                              const AlgorithmParams& params, MsrStats* stats, bool memoize) {
  Ctx ctx{space, params, stats, memoize, /*v2=*/false, {}};
  return guess_node(ctx, S, t, level);
}

BallCover rec_msr2(const MetricSpace& space, const PointSubset& S, int t, int level,
                   const AlgorithmParams& params, MsrStats* stats, bool memoize) {
  Ctx ctx{space, params, stats, memoize, /*v2=*/true, {}};
  return solve_node(ctx, S, t, level);
}

BallCover guess_and_solve_msr2(const MetricSpace& space, const PointSubset& S, int t, int level,
                               const AlgorithmParams& params, MsrStats* stats, bool memoize) {
  Ctx ctx{space, params, stats, memoize, /*v2=*/true, {}};
  return guess_node(ctx, S, t, level);
}

MsrSolveResult solve_msr(const MetricSpace& space, const MsrSolveOptions& options) {
  if (options.k < 1 || options.k > space.n)
    throw std::invalid_argument("solve_msr needs 1 <= k <= n");
  const AlgorithmParams params = AlgorithmParams::make(
      options.k, options.eps_num, options.eps_den, options.level_override, options.guess_override);
  MsrSolveResult result;
  result.params = params;

  // opt = 0 exactly when <= k zero-distance groups exist.
  const std::vector<PointSubset> groups = zero_distance_groups(space);
  if (static_cast<int>(groups.size()) <= options.k) {
    for (const PointSubset& g : groups) {
      result.centers.push_back(g.indices.front());
      result.radii.push_back(Fraction(0));
    }
    result.zero_shortcut = true;
    return result;
  }

  const PointSubset X = full_set(space.n);
  const std::vector<Fraction> grid =
      estimate_opt_candidates(space, options.k, options.eps_num, options.eps_den, Problem::MSR);
  result.estimates_tried = static_cast<int>(grid.size());

  bool have = false;
  for (int gi = 0; gi < static_cast<int>(grid.size()); ++gi) {
    const ScaledInstance scaled = preprocess(space, params, grid[gi], /*msd_cap=*/false);
    const BallCover cover =
        options.strategy == MsrStrategy::V1
            ? rec_msr(scaled.space, X, options.k, 0, params, &result.stats, options.memoize)
            : rec_msr2(scaled.space, X, options.k, 0, params, &result.stats, options.memoize);
    if (!cover.feasible || !covers(scaled.space, cover.balls, X)) continue;

    Fraction mapped = 0;
    for (const Ball& b : cover.balls) mapped += scaled.scale * b.radius;

    // Scaled distances dominate the originals, so the mapped cover still
    // covers; each point joins its first covering ball and every ball shrinks
    // onto its farthest member.
    std::vector<Fraction> shrunk(cover.balls.size(), Fraction(0));
    std::vector<bool> used(cover.balls.size(), false);
    for (int p = 0; p < space.n; ++p) {
      for (std::size_t bi = 0; bi < cover.balls.size(); ++bi) {
        const Fraction d(space.dist(cover.balls[bi].center, p));
        if (d <= scaled.scale * cover.balls[bi].radius) {
          used[bi] = true;
          shrunk[bi] = std::max(shrunk[bi], d);
          break;
        }
      }
    }

    std::vector<int> centers;
    std::vector<Fraction> radii;
    Fraction cost = 0;
    for (std::size_t bi = 0; bi < cover.balls.size(); ++bi) {
      if (!used[bi]) continue;
      centers.push_back(cover.balls[bi].center);
      radii.push_back(shrunk[bi]);
      cost += shrunk[bi];
    }

    if (!have || cost < result.cost) {
      have = true;
      result.centers = std::move(centers);
      result.radii = std::move(radii);
      result.cost = cost;
      result.mapped_cost = mapped;
      result.chosen_estimate = gi;
    }
  }
  if (!have) throw std::logic_error("no estimate produced a covering solution");
  return result;
}

}  // namespace sumclust
