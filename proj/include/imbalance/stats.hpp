#pragma once

#include <span>

namespace imb {

/// Summary statistics of a repeated-timing sample.
struct Summary {
  int count = 0;
  double mean = 0.0;
  double stddev = 0.0;        // sample standard deviation (n-1)
  double ci_halfwidth = 0.0;  // 95% two-sided Student-t half-width
};

double mean(std::span<const double> xs);

/// Sample standard deviation with n-1 in the denominator; needs n >= 2.
double sample_stddev(std::span<const double> xs);

/// Two-sided 95% Student-t quantile (0.975 point) for df >= 1 degrees of
/// freedom. Strictly decreasing in df, so adding repetitions never widens
/// the t factor.
double t_quantile_975(int df);

/// t * s / sqrt(n) at 95% confidence; needs n >= 2.
double ci_halfwidth95(std::span<const double> xs);

Summary summarize(std::span<const double> xs);

}  // namespace imb
