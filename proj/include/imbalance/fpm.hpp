#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace imb {

/// One empirical point of a speed function: the mean processing speed
/// observed for a workload of `x` units, with its 95% confidence half-width.
struct SpeedSample {
  std::int64_t x = 0;            // workload size in units
  double speed = 0.0;            // cells per second, > 0
  double ci_halfwidth = 0.0;     // half-width of the 95% CI on speed, >= 0
  std::int64_t repetitions = 1;  // timing repetitions behind the mean
};

/// Empirical speed function s(x) over a strictly increasing sample grid.
/// No parametric fit is ever applied; between samples the function is
/// piecewise linear and outside the sampled range it is undefined.
///
/// `unit_cells` converts workload units to grid cells: one unit is one
/// "frame" of unit_cells cells (n*l when built by the bench module), so
/// t(x) = x * unit_cells / s(x). `granularity` is the minimal workload
/// increment; consecutive sampled x values differ by a multiple of it.
class SpeedFunction {
 public:
  SpeedFunction(std::int64_t unit_cells, std::int64_t granularity,
                std::vector<SpeedSample> samples, std::string label);

  std::int64_t unit_cells() const { return unit_cells_; }
  std::int64_t granularity() const { return granularity_; }
  const std::vector<SpeedSample>& samples() const { return samples_; }
  const std::string& label() const { return label_; }

  std::int64_t min_x() const { return samples_.front().x; }
  std::int64_t max_x() const { return samples_.back().x; }

  /// True when min_x <= x <= max_x (the evaluable range).
  bool in_range(double x) const;

 private:
  std::int64_t unit_cells_;
  std::int64_t granularity_;
  std::vector<SpeedSample> samples_;
  std::string label_;
};

/// Result of scanning a speed function against the safety condition
/// s(x)/x >= s(x')/x' for all sampled x < x'. When the condition holds,
/// balanced distribution is provably optimal; each violating pair is an
/// imbalancing opportunity.
struct ConditionReport {
  bool satisfied = true;
  // Pairs (x, x') of sampled sizes, x < x', with s(x)/x < s(x')/x'.
  std::vector<std::pair<std::int64_t, std::int64_t>> violations;
  // The violating pair maximizing t(x) - t(x'); absent when satisfied.
  std::optional<std::pair<std::int64_t, std::int64_t>> max_gain_pair;
};

enum class ShapeClass {
  MonotonicallyDecreasing,
  IncreasingConcaveThenDecreasing,
  Other,
};

const char* to_string(ShapeClass c);

/// Classification of a sampled curve against the classical FPM shape
/// restrictions (monotonically decreasing, or increasing+concave up to a
/// peak then decreasing, with the ray condition on the increasing part).
struct ShapeReport {
  ShapeClass classification = ShapeClass::Other;
  std::optional<std::int64_t> peak_x;  // crossover point, when applicable
};

/// Rectangular grid of speed samples over two size parameters (n, m) with
/// the third extent folded into `unit_cells` (cells per unit of n*m area,
/// i.e. the fixed l). Row-major in n, then m.
struct SpeedSurface {
  std::int64_t unit_cells = 1;   // cells per (n=1, m=1) column
  std::int64_t granularity = 1;  // minimal m increment
  std::string label;
  std::vector<std::int64_t> n_values;  // strictly increasing
  std::vector<std::int64_t> m_values;  // strictly increasing
  std::vector<SpeedSample> samples;    // samples[i*m_count + j], x == m_values[j]

  const SpeedSample& at(std::size_t ni, std::size_t mi) const {
    return samples[ni * m_values.size() + mi];
  }
  void validate() const;  // throws on malformed grids
};

/// Speed at workload size x, in cells/second. Exact at sampled points,
/// piecewise-linear between them, and never extrapolated.
/// Throws DomainError for x <= 0 and RangeError outside [min_x, max_x].
double eval_speed(const SpeedFunction& f, double x);

/// Execution time of a workload of x units, in seconds:
/// t(x) = x * unit_cells / eval_speed(f, x), with t(0) = 0 (idle).
/// Throws RangeError when x is outside the evaluable range and not 0.
double eval_time(const SpeedFunction& f, double x);

/// Scans all ordered pairs of sampled sizes for condition violations.
ConditionReport check_condition(const SpeedFunction& f);

/// Classifies the sampled curve; requires at least 3 samples
/// (InsufficientDataError otherwise).
ShapeReport classify_shape(const SpeedFunction& f);

/// Per-x arithmetic mean of several speed functions sharing the same
/// unit_cells, granularity and x grid (IncompatibleModelError otherwise).
/// CI halfwidths are averaged (a documented approximation, not a pooled
/// interval); repetitions are summed.
SpeedFunction average(const std::vector<SpeedFunction>& fs);

/// Copy of f with every sample speed (and CI halfwidth) multiplied by
/// `factor` > 0. Condition reports and partitioner argmins are invariant
/// under this transformation.
SpeedFunction scaled(const SpeedFunction& f, double factor);

/// Cuts the surface along the plane n = fixed_n, yielding the
/// one-parameter function m -> s(fixed_n, m) with unit_cells scaled by
/// fixed_n. Throws RangeError when fixed_n is not a sampled n.
SpeedFunction slice_surface(const SpeedSurface& g, std::int64_t fixed_n);

}  // namespace imb
