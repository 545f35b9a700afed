#include "imbalance/stats.hpp"

#include <cmath>

#include <boost/math/distributions/students_t.hpp>

#include "imbalance/errors.hpp"

namespace imb {

double mean(std::span<const double> xs) {
  if (xs.empty()) throw InsufficientDataError("mean of an empty sample");
  double acc = 0.0;
  for (double x : xs) acc += x;
  return acc / static_cast<double>(xs.size());
}

double sample_stddev(std::span<const double> xs) {
  if (xs.size() < 2) throw InsufficientDataError("stddev needs at least 2 observations");
  double m = mean(xs);
  double acc = 0.0;
  for (double x : xs) acc += (x - m) * (x - m);
  return std::sqrt(acc / static_cast<double>(xs.size() - 1));
}

double t_quantile_975(int df) {
  if (df < 1) throw InsufficientDataError("t quantile needs df >= 1");
  boost::math::students_t_distribution<double> dist(static_cast<double>(df));
  return boost::math::quantile(dist, 0.975);
}

double ci_halfwidth95(std::span<const double> xs) {
  if (xs.size() < 2) throw InsufficientDataError("confidence interval needs >= 2 observations");
  double s = sample_stddev(xs);
  return t_quantile_975(static_cast<int>(xs.size()) - 1) * s /
         std::sqrt(static_cast<double>(xs.size()));
}

Summary summarize(std::span<const double> xs) {
  Summary out;
  out.count = static_cast<int>(xs.size());
  out.mean = mean(xs);
  out.stddev = sample_stddev(xs);
  out.ci_halfwidth = ci_halfwidth95(xs);
  return out;
}

}  // namespace imb
