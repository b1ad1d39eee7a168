#include "sumclust/params.hpp"

#include <cmath>
#include <stdexcept>

namespace sumclust {

AlgorithmParams AlgorithmParams::make(int k, long long eps_num, long long eps_den,
                                      std::optional<int> level_override,
                                      std::optional<int> guess_override) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (eps_num <= 0 || eps_den <= 0 || eps_num > eps_den)
    throw std::invalid_argument("epsilon must lie in (0, 1]");

  AlgorithmParams p;
  p.k = k;
  p.eps_num = eps_num;
  p.eps_den = eps_den;

  const double eps = p.epsilon();
  if (level_override) {
    if (*level_override < 0) throw std::invalid_argument("level cap must be >= 0");
    p.level_cap = *level_override;
    p.level_overridden = true;
  } else {
    p.level_cap = static_cast<int>(std::ceil((6.0 / eps) * std::log(1.0 / eps)));
  }
  if (guess_override) {
    if (*guess_override < 1) throw std::invalid_argument("guess count must be >= 1");
    p.guess_count = *guess_override;
    p.guess_overridden = true;
  } else {
    // ceil(1/eps^2) = ceil(den^2 / num^2), exact
    const long long num2 = eps_num * eps_num;
    const long long den2 = eps_den * eps_den;
    p.guess_count = static_cast<int>((den2 + num2 - 1) / num2);
  }
  p.radius_budget = (8LL * k * eps_den) / eps_num;
  p.defensive_budget = (16LL * k * eps_den) / eps_num;
  return p;
}

double rho(int level, double epsilon, int L) {
  return 1.0 + 25.0 * epsilon + std::pow(1.0 - epsilon / 6.0, L - level);
}

}  // namespace sumclust
