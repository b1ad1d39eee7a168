#pragma once

#include <optional>

#include "sumclust/types.hpp"

namespace sumclust {

// Shared knobs of the approximation schemes. epsilon is the exact rational
// eps_num/eps_den in (0, 1].
struct AlgorithmParams {
  int k = 1;
  long long eps_num = 1;
  long long eps_den = 1;
  int level_cap = 0;            // L
  int guess_count = 1;          // M
  Weight radius_budget = 0;     // floor(8k/eps)
  Weight defensive_budget = 0;  // floor(16k/eps)
  bool level_overridden = false;
  bool guess_overridden = false;

  double epsilon() const { return static_cast<double>(eps_num) / static_cast<double>(eps_den); }
  bool defaults() const { return !level_overridden && !guess_overridden; }

  // L = ceil((6/eps) ln(1/eps)) and M = ceil(1/eps^2) unless overridden.
  // Throws std::invalid_argument unless k >= 1 and 0 < eps <= 1.
  static AlgorithmParams make(int k, long long eps_num, long long eps_den,
                              std::optional<int> level_override = {},
                              std::optional<int> guess_override = {});
};

// Per-level bound 1 + 25*eps + (1 - eps/6)^(L - level).
double rho(int level, double epsilon, int L);

}  // namespace sumclust
