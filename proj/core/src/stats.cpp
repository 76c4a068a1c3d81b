#include "looplab/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <cmath>
#include <stdexcept>

#include "looplab/errors.hpp"

namespace looplab {

ChiSquareResult chi_square_against(const std::vector<long>& counts,
                                   const std::vector<Rational>& law) {
  if (counts.size() != law.size())
    throw dimension_error("count vector and law have different lengths");
  if (counts.size() < 2) throw dimension_error("chi-square needs at least two cells");
  long total = 0;
  for (long c : counts) {
    if (c < 0) throw std::domain_error("negative count");
    total += c;
  }
  if (total == 0) throw std::domain_error("chi-square needs at least one observation");

  ChiSquareResult r;
  r.dof = static_cast<long>(counts.size()) - 1;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (law[i] <= 0)
      throw std::domain_error("law must be strictly positive in every cell");
    double expected = static_cast<double>(total) * to_double(law[i]);
    double diff = static_cast<double>(counts[i]) - expected;
    r.statistic += diff * diff / expected;
  }
  boost::math::chi_squared dist(static_cast<double>(r.dof));
  r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
  return r;
}

double total_variation(const std::vector<long>& a, const std::vector<long>& b) {
  if (a.size() != b.size()) throw dimension_error("count vectors have different lengths");
  long ta = 0, tb = 0;
  for (long c : a) ta += c;
  for (long c : b) tb += c;
  if (ta == 0 || tb == 0) throw std::domain_error("empty count vector");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    sum += std::abs(static_cast<double>(a[i]) / static_cast<double>(ta) -
                    static_cast<double>(b[i]) / static_cast<double>(tb));
  return sum / 2.0;
}

}  // namespace looplab
