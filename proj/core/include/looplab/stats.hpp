#pragma once

#include <vector>

#include "looplab/rational.hpp"

namespace looplab {

struct ChiSquareResult {
  double statistic = 0.0;
  double p_value = 1.0;
  long dof = 0;
};

// Goodness of fit of observed counts against an exact law (all cells must
// have positive expected mass).  dof = cells - 1.
ChiSquareResult chi_square_against(const std::vector<long>& counts,
                                   const std::vector<Rational>& law);

// Total variation distance between the normalized count vectors.
double total_variation(const std::vector<long>& a, const std::vector<long>& b);

}  // namespace looplab
