#pragma once

#include <stdexcept>
#include <string>

#include "sumclust/types.hpp"

namespace sumclust {

struct AsymmetricDistance : std::runtime_error {
  int i, j;
  AsymmetricDistance(int i_, int j_)
      : std::runtime_error("distance matrix not symmetric at (" + std::to_string(i_) + "," +
                           std::to_string(j_) + ")"),
        i(i_),
        j(j_) {}
};

struct NonzeroDiagonal : std::runtime_error {
  int i;
  explicit NonzeroDiagonal(int i_)
      : std::runtime_error("nonzero diagonal entry at index " + std::to_string(i_)), i(i_) {}
};

struct TriangleViolation : std::runtime_error {
  int i, j, via;
  TriangleViolation(int i_, int j_, int via_)
      : std::runtime_error("triangle inequality violated: d(" + std::to_string(i_) + "," +
                           std::to_string(j_) + ") > d(" + std::to_string(i_) + "," +
                           std::to_string(via_) + ") + d(" + std::to_string(via_) + "," +
                           std::to_string(j_) + ")"),
        i(i_),
        j(j_),
        via(via_) {}
};

struct EmptySubset : std::runtime_error {
  EmptySubset() : std::runtime_error("operation requires a non-empty subset") {}
};

struct NonpositiveEstimate : std::runtime_error {
  NonpositiveEstimate() : std::runtime_error("opt estimate must be positive") {}
};

// Brute-force guard: instance too large for exhaustive enumeration.
struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

// The whole input set violates the constraint, so no clustering is feasible.
struct InfeasibleConstraint : std::runtime_error {
  InfeasibleConstraint() : std::runtime_error("input set violates the constraint") {}
};

// Witness: two disjoint feasible subsets whose union is infeasible.
struct NotMergeable : std::runtime_error {
  PointSubset a, b;
  NotMergeable(PointSubset a_, PointSubset b_)
      : std::runtime_error("constraint is not mergeable (union of disjoint feasible sets is infeasible)"),
        a(std::move(a_)),
        b(std::move(b_)) {}
};

}  // namespace sumclust
