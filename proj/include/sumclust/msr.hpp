#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sumclust/params.hpp"
#include "sumclust/preprocess.hpp"

namespace sumclust {

// A defensive clustering guess: balls D_1..D_t' on the forced greedy center
// sequence with integer radii summing <= defensive_budget, covering S, plus
// a positive count k_j per ball with sum <= t.
struct DefensiveCandidate {
  std::vector<Ball> balls;
  std::vector<int> counts;
};

// Enumerates every candidate for t' in [1, t]; radius tuples run in
// colexicographic order and centers are forced: ball i sits on the least
// point the earlier balls leave uncovered. Empty result means no tuple
// covers S within budget (a bad opt estimate upstream).
std::vector<DefensiveCandidate> candidate_clusterings(const MetricSpace& space,
                                                      const PointSubset& S, int t,
                                                      const AlgorithmParams& params);

struct ExpansionResult {
  Ball expanded;              // E
  std::vector<int> inside;    // J_in: candidate balls contained in E
  std::vector<int> boundary;  // J_b: intersecting, not contained
  int k_in = 0;
  int k_out = 0;
  int expansions = 0;
};

// Grows E from the first positive-radius ball by 2*r_max while the boundary
// is nonempty and the expansion is cheap (r_sum >= 8*r_max) or large
// (r_max >= eps^2 * r(E)). Ball-in-ball relations use point sets of the
// whole space.
ExpansionResult expanded_ball(const MetricSpace& space, const PointSubset& S,
                              const DefensiveCandidate& candidate, const AlgorithmParams& params);

struct TemporarySubproblem {
  PointSubset points;  // S_p
  int budget = 0;      // k'_p
  Ball expanded;       // E_p
};

struct TemporarySubproblems {
  std::vector<int> chosen;  // ball indices: good set G plus every boundary ball
  std::vector<TemporarySubproblem> subproblems;
};

// Partitions the candidate's balls into chosen balls and expanded regions:
// repeatedly seeds E_p from the lowest available positive-radius ball,
// expands against available balls only, records
// S_p = ((S n E_p) \ chosen balls) \ earlier E_q, and retires inside and
// boundary balls.
TemporarySubproblems get_temporary_subproblems(const MetricSpace& space, const PointSubset& S,
                                               const DefensiveCandidate& candidate,
                                               const std::vector<int>& good,
                                               const AlgorithmParams& params);

struct MsrStats {
  std::vector<std::uint64_t> nodes_per_level;  // rec_msr calls by level
  std::uint64_t candidates_enumerated = 0;     // defensive candidates built
  std::uint64_t tee_entries = 0;               // solutions considered across candidate sets
  std::uint64_t guess_tuples = 0;              // ball tuples tried by guess_and_solve
  std::uint64_t memo_hits = 0;

  void count_node(int level) {
    if (nodes_per_level.size() <= static_cast<std::size_t>(level))
      nodes_per_level.resize(level + 1, 0);
    ++nodes_per_level[level];
  }
};

// Level-budgeted recursion. Base cases: empty S -> empty cover; t = 0 ->
// infeasible. Seeds the solution pool with every candidate clustering; at
// level L returns the cheapest. Below L, per candidate: (a) every ball
// expanded by every r' in [0, radius_budget], recurse on the rest with t-1;
// (b) expanded_ball, every boundary radius tuple summing <= radius_budget,
// recurse outside with k_out at the same level and guess inside with k_in at
// level+1. Centers stay inside S throughout. Ties: first found.
BallCover rec_msr(const MetricSpace& space, const PointSubset& S, int t, int level,
                  const AlgorithmParams& params, MsrStats* stats = nullptr,
                  bool memoize = true);

// Tries every min(t, M)-tuple from {Ball(p, r): p in S, r in {d(p,q): q in
// X}} (deduplicated), recursing rec_msr on the uncovered rest with budget
// t - M' at the level passed in.
BallCover guess_and_solve_msr(const MetricSpace& space, const PointSubset& S, int t, int level,
                              const AlgorithmParams& params, MsrStats* stats = nullptr,
                              bool memoize = true);

// Faster recursion that only ever descends a level: per candidate and per
// good-ball subset G, builds temporary subproblems, expands chosen balls by
// radius tuples, and solves each pruned subproblem independently one level
// down (no same-level recursive calls, unlike rec_msr).
BallCover rec_msr2(const MetricSpace& space, const PointSubset& S, int t, int level,
                   const AlgorithmParams& params, MsrStats* stats = nullptr,
                   bool memoize = true);

BallCover guess_and_solve_msr2(const MetricSpace& space, const PointSubset& S, int t, int level,
                               const AlgorithmParams& params, MsrStats* stats = nullptr,
                               bool memoize = true);

enum class MsrStrategy { V1, V2 };

struct MsrSolveOptions {
  int k = 1;
  long long eps_num = 3;
  long long eps_den = 4;
  MsrStrategy strategy = MsrStrategy::V1;
  std::optional<int> level_override;
  std::optional<int> guess_override;
  bool memoize = true;
};

struct MsrSolveResult {
  // Cover in original Weight units: centers with exact rational radii
  // (scaled radii mapped through the estimate's scale, then shrunk to the
  // farthest point actually assigned to each ball).
  std::vector<int> centers;
  std::vector<Fraction> radii;
  Fraction cost = 0;         // sum of radii, Weight units
  Fraction mapped_cost = 0;  // literal scale-mapped cost before shrinking
  AlgorithmParams params;
  MsrStats stats;
  int estimates_tried = 0;
  int chosen_estimate = -1;  // grid index of the winning estimate
  bool zero_shortcut = false;
};

// Runs the scheme once per opt estimate (skipping estimates without a
// covering candidate), maps each cover back to original units, returns the
// cheapest. Always feasible.
MsrSolveResult solve_msr(const MetricSpace& space, const MsrSolveOptions& options);

}  // namespace sumclust
