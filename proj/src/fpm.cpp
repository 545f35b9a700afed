#include "imbalance/fpm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "imbalance/errors.hpp"

namespace imb {

SpeedFunction::SpeedFunction(std::int64_t unit_cells, std::int64_t granularity,
                             std::vector<SpeedSample> samples, std::string label)
    : unit_cells_(unit_cells),
      granularity_(granularity),
      samples_(std::move(samples)),
      label_(std::move(label)) {
  if (unit_cells_ < 1) throw ContractError("unit_cells must be >= 1");
  if (granularity_ < 1) throw ContractError("granularity must be >= 1");
  if (samples_.empty()) throw ContractError("speed function needs at least one sample");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const SpeedSample& s = samples_[i];
    if (s.x <= 0) throw ContractError("sample x must be > 0");
    if (!(s.speed > 0.0)) throw ContractError("sample speed must be > 0");
    if (s.ci_halfwidth < 0.0) throw ContractError("ci_halfwidth must be >= 0");
    if (s.repetitions < 1) throw ContractError("repetitions must be >= 1");
    if (i > 0) {
      std::int64_t dx = s.x - samples_[i - 1].x;
      if (dx <= 0) throw ContractError("sample x values must be strictly increasing");
      if (dx % granularity_ != 0)
        throw ContractError("sample spacing must be a multiple of the granularity");
    }
  }
}

bool SpeedFunction::in_range(double x) const {
  return x >= static_cast<double>(min_x()) && x <= static_cast<double>(max_x());
}

double eval_speed(const SpeedFunction& f, double x) {
  if (!(x > 0.0)) throw DomainError("workload size must be > 0");
  if (!f.in_range(x))
    throw RangeError("workload size " + std::to_string(x) + " outside sampled range [" +
                     std::to_string(f.min_x()) + ", " + std::to_string(f.max_x()) + "]");
  const auto& ss = f.samples();
  auto hi = std::lower_bound(ss.begin(), ss.end(), x, [](const SpeedSample& s, double v) {
    return static_cast<double>(s.x) < v;
  });
  // in_range guarantees hi != end
  if (static_cast<double>(hi->x) == x) return hi->speed;
  auto lo = hi - 1;
  double x0 = static_cast<double>(lo->x), x1 = static_cast<double>(hi->x);
  double u = (x - x0) / (x1 - x0);
  return lo->speed + (hi->speed - lo->speed) * u;
}

double eval_time(const SpeedFunction& f, double x) {
  if (x == 0.0) return 0.0;  // idle processor
  if (x > static_cast<double>(f.max_x()))
    throw RangeError("workload size " + std::to_string(x) + " above sampled range");
  return x * static_cast<double>(f.unit_cells()) / eval_speed(f, x);
}

namespace {

// s(a)/a < s(b)/b without forming the quotients, so that scaling every
// speed by the same positive factor cannot perturb the comparison
// differently on the two sides.
bool ratio_less(const SpeedSample& a, const SpeedSample& b) {
  return a.speed * static_cast<double>(b.x) < b.speed * static_cast<double>(a.x);
}

}  // namespace

ConditionReport check_condition(const SpeedFunction& f) {
  ConditionReport report;
  const auto& ss = f.samples();
  double best_gain = 0.0;
  for (std::size_t i = 0; i < ss.size(); ++i) {
    for (std::size_t j = i + 1; j < ss.size(); ++j) {
      if (ratio_less(ss[i], ss[j])) {
        report.violations.emplace_back(ss[i].x, ss[j].x);
        double gain = eval_time(f, static_cast<double>(ss[i].x)) -
                      eval_time(f, static_cast<double>(ss[j].x));
        if (!report.max_gain_pair || gain > best_gain) {
          best_gain = gain;
          report.max_gain_pair = {ss[i].x, ss[j].x};
        }
      }
    }
  }
  report.satisfied = report.violations.empty();
  return report;
}

const char* to_string(ShapeClass c) {
  switch (c) {
    case ShapeClass::MonotonicallyDecreasing:
      return "monotonically-decreasing";
    case ShapeClass::IncreasingConcaveThenDecreasing:
      return "increasing-concave-then-decreasing";
    case ShapeClass::Other:
      return "other";
  }
  return "other";
}

ShapeReport classify_shape(const SpeedFunction& f) {
  const auto& ss = f.samples();
  if (ss.size() < 3) throw InsufficientDataError("shape classification needs >= 3 samples");

  auto non_increasing_from = [&](std::size_t start) {
    for (std::size_t i = start + 1; i < ss.size(); ++i)
      if (ss[i].speed > ss[i - 1].speed) return false;
    return true;
  };

  if (non_increasing_from(0)) return {ShapeClass::MonotonicallyDecreasing, std::nullopt};

  // End of the strictly increasing prefix.
  std::size_t peak = 0;
  while (peak + 1 < ss.size() && ss[peak + 1].speed > ss[peak].speed) ++peak;
  if (peak == 0 || !non_increasing_from(peak)) return {ShapeClass::Other, std::nullopt};

  // Concavity on the increasing part: slopes non-increasing.
  for (std::size_t i = 1; i < peak; ++i) {
    double s0 = (ss[i].speed - ss[i - 1].speed) / static_cast<double>(ss[i].x - ss[i - 1].x);
    double s1 = (ss[i + 1].speed - ss[i].speed) / static_cast<double>(ss[i + 1].x - ss[i].x);
    if (s1 > s0) return {ShapeClass::Other, std::nullopt};
  }

  // Ray condition: a line through the origin meets the increasing part at
  // most once, i.e. s(x)/x is strictly decreasing on [min_x, peak_x].
  // (An increasing s(x)/x would contradict the safety condition the FPM
  // restrictions are meant to guarantee.)
  for (std::size_t i = 1; i <= peak; ++i)
    if (!ratio_less(ss[i], ss[i - 1])) return {ShapeClass::Other, std::nullopt};

  return {ShapeClass::IncreasingConcaveThenDecreasing, ss[peak].x};
}

SpeedFunction average(const std::vector<SpeedFunction>& fs) {
  if (fs.empty()) throw ContractError("average needs at least one speed function");
  const SpeedFunction& first = fs.front();
  for (const SpeedFunction& f : fs) {
    if (f.unit_cells() != first.unit_cells() || f.granularity() != first.granularity())
      throw IncompatibleModelError("speed functions disagree on units or granularity");
    if (f.samples().size() != first.samples().size())
      throw IncompatibleModelError("speed functions sampled on different grids");
    for (std::size_t i = 0; i < f.samples().size(); ++i)
      if (f.samples()[i].x != first.samples()[i].x)
        throw IncompatibleModelError("speed functions sampled on different grids");
  }

  std::vector<SpeedSample> out;
  out.reserve(first.samples().size());
  for (std::size_t i = 0; i < first.samples().size(); ++i) {
    SpeedSample s;
    s.x = first.samples()[i].x;
    double speed_sum = 0.0, hw_sum = 0.0;
    std::int64_t reps = 0;
    for (const SpeedFunction& f : fs) {
      speed_sum += f.samples()[i].speed;
      hw_sum += f.samples()[i].ci_halfwidth;
      reps += f.samples()[i].repetitions;
    }
    s.speed = speed_sum / static_cast<double>(fs.size());
    s.ci_halfwidth = hw_sum / static_cast<double>(fs.size());
    s.repetitions = reps;
    out.push_back(s);
  }

  std::ostringstream label;
  label << "avg(";
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) label << ",";
    label << fs[i].label();
  }
  label << ")";
  return SpeedFunction(first.unit_cells(), first.granularity(), std::move(out), label.str());
}

SpeedFunction scaled(const SpeedFunction& f, double factor) {
  if (!(factor > 0.0)) throw DomainError("scale factor must be > 0");
  std::vector<SpeedSample> out = f.samples();
  for (SpeedSample& s : out) {
    s.speed *= factor;
    s.ci_halfwidth *= factor;
  }
  return SpeedFunction(f.unit_cells(), f.granularity(), std::move(out), f.label());
}

void SpeedSurface::validate() const {
  if (unit_cells < 1) throw ContractError("unit_cells must be >= 1");
  if (granularity < 1) throw ContractError("granularity must be >= 1");
  if (n_values.empty() || m_values.empty()) throw ContractError("surface grid is empty");
  if (samples.size() != n_values.size() * m_values.size())
    throw ContractError("surface sample count does not match its grid");
  for (std::size_t i = 1; i < n_values.size(); ++i)
    if (n_values[i] <= n_values[i - 1])
      throw ContractError("surface n values must be strictly increasing");
  for (std::size_t j = 1; j < m_values.size(); ++j) {
    std::int64_t dm = m_values[j] - m_values[j - 1];
    if (dm <= 0) throw ContractError("surface m values must be strictly increasing");
    if (dm % granularity != 0)
      throw ContractError("surface m spacing must be a multiple of the granularity");
  }
  for (std::size_t i = 0; i < n_values.size(); ++i)
    for (std::size_t j = 0; j < m_values.size(); ++j)
      if (at(i, j).x != m_values[j]) throw ContractError("surface sample x disagrees with grid");
}

SpeedFunction slice_surface(const SpeedSurface& g, std::int64_t fixed_n) {
  g.validate();
  auto it = std::find(g.n_values.begin(), g.n_values.end(), fixed_n);
  if (it == g.n_values.end())
    throw RangeError("n=" + std::to_string(fixed_n) + " is not a sampled n of the surface");
  std::size_t row = static_cast<std::size_t>(it - g.n_values.begin());
  std::vector<SpeedSample> samples(g.samples.begin() + row * g.m_values.size(),
                                   g.samples.begin() + (row + 1) * g.m_values.size());
  return SpeedFunction(fixed_n * g.unit_cells, g.granularity, std::move(samples),
                       g.label + "@n=" + std::to_string(fixed_n));
}

}  // namespace imb
