#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "sumclust/metric.hpp"
#include "sumclust/params.hpp"

namespace sumclust {

// Exact rational used for scale factors and mapped-back costs; values are in
// Weight units of the original space unless stated otherwise.
using Fraction = boost::multiprecision::cpp_rational;

enum class Problem { MSR, MSD };

struct ScaledInstance {
  MetricSpace space;  // integer distances, denom = 1
  Fraction scale;     // g: one scaled unit equals g original Weight units
};

// Rounds every distance up to the next multiple of g = (eps/(4k))*apx,
// recomputes the metric closure, divides by g. With msd_cap the result is
// additionally capped at defensive_budget, which preserves the optimum.
// Throws NonpositiveEstimate.
ScaledInstance preprocess(const MetricSpace& space, const AlgorithmParams& params,
                          const Fraction& apx, bool msd_cap);

// Farthest-first traversal radius after k centers, seeded at point 0.
Weight farthest_first_radius(const MetricSpace& space, int k);

// Geometric grid lower*(1+eps)^i covering [lower, 2k*lower] (MSR) or
// [lower, 4k*lower] (MSD), lower being the farthest-first radius; some grid
// value v satisfies opt <= v <= (1+eps)*max(opt, lower). A zero radius bound
// (opt = 0, handled by callers up front) yields the sentinel grid {1}.
std::vector<Fraction> estimate_opt_candidates(const MetricSpace& space, int k, long long eps_num,
                                              long long eps_den, Problem problem);

// Exact helpers shared by the solvers and tests.
Weight ceil_div_fraction(Weight value, const Fraction& g);  // ceil(value / g)
double fraction_to_double(const Fraction& f);

}  // namespace sumclust
