#include "sumclust/preprocess.hpp"

#include <limits>
#include <stdexcept>

#include "sumclust/errors.hpp"

namespace sumclust {

using boost::multiprecision::cpp_int;

Weight ceil_div_fraction(Weight value, const Fraction& g) {
  // value / g = value * den(g) / num(g), both positive
  cpp_int num = cpp_int(value) * denominator(g);
  cpp_int den = numerator(g);
  cpp_int q = (num + den - 1) / den;
  if (q > std::numeric_limits<Weight>::max())
    throw std::overflow_error("scaled distance does not fit 64 bits");
  return q.convert_to<Weight>();
}

double fraction_to_double(const Fraction& f) { return f.convert_to<double>(); }

ScaledInstance preprocess(const MetricSpace& space, const AlgorithmParams& params,
                          const Fraction& apx, bool msd_cap) {
  if (apx <= 0) throw NonpositiveEstimate();
  const Fraction g = apx * Fraction(params.eps_num, params.eps_den) / (4 * params.k);

  MetricSpace scaled;
  scaled.n = space.n;
  scaled.denom = 1;
  scaled.d.resize(space.d.size());
  for (std::size_t i = 0; i < space.d.size(); ++i)
    scaled.d[i] = ceil_div_fraction(space.d[i], g);
  scaled = metric_closure(scaled);
  if (msd_cap) {
    // Capping keeps the triangle inequality and the optimum: any cluster
    // using a capped pair already costs at least the whole budget.
    for (Weight& w : scaled.d) w = std::min(w, params.defensive_budget);
  }
  return ScaledInstance{std::move(scaled), g};
}

Weight farthest_first_radius(const MetricSpace& space, int k) {
  if (k < 1 || k > space.n) throw std::invalid_argument("farthest-first needs 1 <= k <= n");
  std::vector<Weight> dist_to_centers(space.n);
  for (int p = 0; p < space.n; ++p) dist_to_centers[p] = space.dist(0, p);
  for (int round = 1; round < k; ++round) {
    int far = 0;
    for (int p = 1; p < space.n; ++p)
      if (dist_to_centers[p] > dist_to_centers[far]) far = p;
    for (int p = 0; p < space.n; ++p)
      dist_to_centers[p] = std::min(dist_to_centers[p], space.dist(far, p));
  }
  Weight radius = 0;
  for (Weight w : dist_to_centers) radius = std::max(radius, w);
  return radius;
}

std::vector<Fraction> estimate_opt_candidates(const MetricSpace& space, int k, long long eps_num,
                                              long long eps_den, Problem problem) {
  if (k < 1 || k > space.n) throw std::invalid_argument("estimates need 1 <= k <= n");
  const Weight lower = farthest_first_radius(space, k);
  if (lower == 0) return {Fraction(1)};  // opt = 0; callers short-circuit

  const Fraction growth = Fraction(eps_den + eps_num, eps_den);  // 1 + eps
  const Fraction upper = Fraction((problem == Problem::MSR ? 2 : 4) * k) * lower;
  std::vector<Fraction> grid;
  Fraction v(lower);
  grid.push_back(v);
  while (v < upper) {
    v *= growth;
    grid.push_back(v);
  }
  return grid;
}

}  // namespace sumclust
