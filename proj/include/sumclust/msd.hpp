#pragma once

#include <cstdint>
#include <random>

#include "sumclust/constraint.hpp"
#include "sumclust/minplus.hpp"
#include "sumclust/preprocess.hpp"

namespace sumclust {

struct MsdStats {
  std::uint64_t nodes = 0;  // recursion-tree nodes
};

// Randomized divide-and-merge: split S at a uniform real threshold around a
// diameter endpoint, recurse both sides with budget t-1, (min,+)-merge.
// Every entry starts as the single cluster {S}. Constraint-modified cost
// (infeasible clusters cost +inf) when a constraint is present.
ClusteringVector rec_msd(const MetricSpace& space, const PointSubset& S, int t,
                         std::mt19937_64& rng, const Constraint& constraint,
                         MsdStats* stats = nullptr);

// Deterministic variant: tries every integral threshold R in
// {0, ..., diam(S)-1} and keeps the best merge. On integer distances the
// unconstrained entry r is exactly opt_r(S); with a mergeable constraint it
// is the optimal constrained cost.
ClusteringVector det_rec_msd(const MetricSpace& space, const PointSubset& S, int t,
                             const Constraint& constraint, MsdStats* stats = nullptr);

// Exact recursion: order S by distance from a diameter endpoint, try every
// split position with budget t-1 on both sides, merge, keep the
// single-cluster option. Unconstrained only.
ClusteringVector exact_msd(const MetricSpace& space, const PointSubset& S, int t,
                           MsdStats* stats = nullptr);

enum class MsdMode { Rand, Det, Exact };

struct MsdSolveOptions {
  int k = 1;
  long long eps_num = 1;
  long long eps_den = 2;
  MsdMode mode = MsdMode::Exact;
  Constraint constraint = Constraint::none();
  std::uint64_t seed = 0;
  long long reps_multiplier = 1;  // multiplies ceil((1/eps)^k ln n) in rand mode
};

struct MsdSolveResult {
  Clustering clustering;
  Cost cost = kInfeasible;  // Weight units of the input space
  std::uint64_t nodes = 0;
  long long runs = 0;        // repetitions (rand) or scaled runs (det)
  int estimates_tried = 0;   // det mode grid size
  bool zero_shortcut = false;
};

// rand: cheapest entry-k across seeded repetitions. det: estimate grid ->
// preprocess+cap -> det_rec_msd, cheapest mapped-back result. exact:
// exact_msd entry-k. Throws InfeasibleConstraint when X itself violates the
// constraint; std::invalid_argument for exact mode with a constraint.
MsdSolveResult solve_msd(const MetricSpace& space, const MsdSolveOptions& options);

}  // namespace sumclust
