#include "imbalance/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "imbalance/errors.hpp"

namespace imb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Per-candidate-share table in granules (multiples of the granularity).
// time[c] is the predicted time of the share c*granularity, or infinity
// when that share cannot be evaluated (outside the sampled range, or an
// idle share without allow_idle).
struct ShareTable {
  std::int64_t granules = 0;  // total workload in granules
  std::int64_t lo = 0;        // smallest evaluable non-idle granule count
  std::int64_t hi = 0;        // largest evaluable granule count
  bool allow_idle = false;
  std::vector<double> time;   // indexed by granule count, 0..hi

  bool valid(std::int64_t c) const {
    if (c == 0) return allow_idle;
    return c >= lo && c <= hi;
  }
};

ShareTable make_table(const PartitionProblem& p) {
  const SpeedFunction& model = p.model;
  const std::int64_t g = model.granularity();
  if (p.total <= 0) throw ContractError("total workload must be > 0");
  if (p.total % g != 0)
    throw AlignmentError("total " + std::to_string(p.total) +
                         " is not a multiple of the granularity " + std::to_string(g));
  ShareTable t;
  t.granules = p.total / g;
  t.allow_idle = p.allow_idle;
  t.lo = (model.min_x() + g - 1) / g;
  t.hi = std::min(model.max_x() / g, t.granules);
  t.time.assign(static_cast<std::size_t>(std::max<std::int64_t>(t.hi + 1, 1)), kInf);
  if (t.allow_idle) t.time[0] = 0.0;
  for (std::int64_t c = t.lo; c <= t.hi; ++c)
    t.time[static_cast<std::size_t>(c)] = eval_time(model, static_cast<double>(c * g));
  return t;
}

Partition finish(const PartitionProblem& p, std::vector<std::int64_t> shares,
                 std::optional<std::int64_t> offset) {
  Partition out;
  out.shares = std::move(shares);
  out.per_time.reserve(out.shares.size());
  out.makespan = 0.0;
  for (std::int64_t s : out.shares) {
    double t = eval_time(p.model, static_cast<double>(s));
    out.per_time.push_back(t);
    out.makespan = std::max(out.makespan, t);
  }
  out.offset = offset;
  return out;
}

}  // namespace

Partition predict_makespan(const SpeedFunction& model, std::span<const std::int64_t> shares) {
  if (shares.empty()) throw ContractError("share list is empty");
  Partition out;
  out.shares.assign(shares.begin(), shares.end());
  out.per_time.reserve(shares.size());
  out.makespan = 0.0;
  for (std::int64_t s : shares) {
    if (s < 0) throw ContractError("shares must be >= 0");
    double t = eval_time(model, static_cast<double>(s));
    out.per_time.push_back(t);
    out.makespan = std::max(out.makespan, t);
  }
  return out;
}

Partition partition_paired(const PartitionProblem& problem) {
  const int p = problem.processors;
  if (p < 2 || p % 2 != 0)
    throw ContractError("paired partitioning requires an even processor count; "
                        "use partition_general for p=" + std::to_string(p));
  const std::int64_t g = problem.model.granularity();
  if (problem.total <= 0) throw ContractError("total workload must be > 0");
  if (problem.total % p != 0 || (problem.total / p) % g != 0)
    throw AlignmentError("n/p must be an integer multiple of the granularity");

  const std::int64_t base = problem.total / p;
  const std::int64_t min_share = problem.allow_idle ? 0 : g;
  const SpeedFunction& model = problem.model;

  auto evaluable = [&](std::int64_t x) {
    if (x == 0) return problem.allow_idle;
    return x >= model.min_x() && x <= model.max_x();
  };

  double t_min = kInf;
  std::int64_t best_k = -1;
  for (std::int64_t k = 0;; ++k) {
    std::int64_t x_r = base + k * g;
    std::int64_t x_l = base - k * g;
    if (x_l < min_share) break;
    if (x_r > model.max_x()) break;  // offsets only grow from here
    if (!evaluable(x_r) || !evaluable(x_l)) continue;
    double t = std::max(eval_time(model, static_cast<double>(x_r)),
                        eval_time(model, static_cast<double>(x_l)));
    if (t < t_min) {  // ties keep the most balanced offset
      t_min = t;
      best_k = k;
    }
  }
  if (best_k < 0)
    throw InfeasibleError("no evaluable paired assignment for n=" + std::to_string(problem.total) +
                          ", p=" + std::to_string(p));

  std::vector<std::int64_t> shares(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i)
    shares[static_cast<std::size_t>(i)] = (i % 2 == 0) ? base - best_k * g : base + best_k * g;
  return finish(problem, std::move(shares), best_k * g);
}

Partition partition_general(const PartitionProblem& problem) {
  const int p = problem.processors;
  if (p < 1) throw ContractError("processor count must be >= 1");
  ShareTable tab = make_table(problem);
  const std::int64_t U = tab.granules;
  const std::size_t cols = static_cast<std::size_t>(U + 1);

  // Pass 1: minimal makespan over (processors used, granules assigned),
  // rolling one row per processor.
  std::vector<double> prev(cols, kInf), cur(cols, kInf);
  for (std::int64_t u = 0; u <= U; ++u)
    if (tab.valid(u)) prev[static_cast<std::size_t>(u)] = tab.time[static_cast<std::size_t>(u)];
  for (int j = 2; j <= p; ++j) {
    std::fill(cur.begin(), cur.end(), kInf);
    for (std::int64_t u = 0; u <= U; ++u) {
      double best = kInf;
      if (tab.allow_idle && prev[static_cast<std::size_t>(u)] < best)
        best = prev[static_cast<std::size_t>(u)];  // c = 0
      for (std::int64_t c = tab.lo; c <= std::min(tab.hi, u); ++c) {
        double rest = prev[static_cast<std::size_t>(u - c)];
        if (rest == kInf) continue;
        double t = std::max(tab.time[static_cast<std::size_t>(c)], rest);
        if (t < best) best = t;
      }
      cur[static_cast<std::size_t>(u)] = best;
    }
    std::swap(prev, cur);
  }
  const double makespan = prev[static_cast<std::size_t>(U)];
  if (makespan == kInf)
    throw InfeasibleError("no feasible assignment: n=" + std::to_string(problem.total) + ", p=" +
                          std::to_string(p) + (problem.allow_idle ? "" : ", idle disallowed"));

  // Pass 2: smallest achievable maximum share among optimal assignments,
  // per (processors, granules); drives the lexicographic reconstruction.
  constexpr std::int64_t kNoFit = std::numeric_limits<std::int64_t>::max();
  auto usable = [&](std::int64_t c) {
    return tab.valid(c) && tab.time[static_cast<std::size_t>(c)] <= makespan;
  };
  std::vector<std::vector<std::int64_t>> h(static_cast<std::size_t>(p),
                                           std::vector<std::int64_t>(cols, kNoFit));
  for (std::int64_t u = 0; u <= U; ++u)
    if (usable(u)) h[0][static_cast<std::size_t>(u)] = u;
  for (int j = 1; j < p; ++j) {
    for (std::int64_t u = 0; u <= U; ++u) {
      std::int64_t best = kNoFit;
      if (tab.allow_idle) best = h[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(u)];
      for (std::int64_t c = tab.lo; c <= std::min(tab.hi, u); ++c) {
        if (!usable(c)) continue;
        std::int64_t rest = h[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(u - c)];
        if (rest == kNoFit) continue;
        best = std::min(best, std::max(c, rest));
      }
      h[static_cast<std::size_t>(j)][static_cast<std::size_t>(u)] = best;
    }
  }

  // Greedy reconstruction: smallest feasible share first yields the
  // lexicographically smallest non-increasing share vector.
  std::vector<std::int64_t> shares;
  shares.reserve(static_cast<std::size_t>(p));
  std::int64_t u = U;
  std::int64_t cap = U;
  for (int j = p; j >= 1; --j) {
    bool found = false;
    for (std::int64_t c = 0; c <= std::min(cap, u); ++c) {
      if (c > 0 && c < tab.lo) {
        c = tab.lo - 1;  // skip the non-evaluable gap
        continue;
      }
      if (!usable(c)) continue;
      if (j == 1) {
        if (c != u) continue;
      } else if (h[static_cast<std::size_t>(j - 2)][static_cast<std::size_t>(u - c)] > c) {
        continue;
      }
      shares.push_back(c);
      u -= c;
      cap = c;
      found = true;
      break;
    }
    if (!found) throw InfeasibleError("internal: reconstruction failed");  // unreachable
  }

  // Largest shares first.
  std::reverse(shares.begin(), shares.end());
  for (std::int64_t& s : shares) s *= problem.model.granularity();
  return finish(problem, std::move(shares), std::nullopt);
}

namespace {

// Number of compositions of `units` into `parts` non-negative (or positive)
// integers, saturating instead of overflowing.
std::int64_t composition_count(std::int64_t units, int parts, bool allow_zero) {
  // C(units + parts - 1, parts - 1) with zeros, C(units - 1, parts - 1) without.
  std::int64_t n = allow_zero ? units + parts - 1 : units - 1;
  std::int64_t k = parts - 1;
  if (k < 0 || n < k) return 0;
  long double acc = 1.0L;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc *= static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (acc > 4.0e18L) return std::numeric_limits<std::int64_t>::max();
  }
  return static_cast<std::int64_t>(acc + 0.5L);
}

}  // namespace

Partition brute_force_oracle(const PartitionProblem& problem, std::int64_t max_compositions) {
  const int p = problem.processors;
  if (p < 1) throw ContractError("processor count must be >= 1");
  ShareTable tab = make_table(problem);

  std::int64_t count = composition_count(tab.granules, p, problem.allow_idle);
  if (count > max_compositions)
    throw TooLargeError("search space of " + std::to_string(count) +
                        " compositions exceeds the cap of " + std::to_string(max_compositions));

  std::vector<std::int64_t> current(static_cast<std::size_t>(p));
  std::vector<std::int64_t> best_shares;
  double best_ms = kInf;

  // Enumerate non-increasing granule vectors; every multiset appears once.
  auto rec = [&](auto&& self, int pos, std::int64_t remaining, std::int64_t cap,
                 double ms_so_far) -> void {
    if (pos == p - 1) {
      if (remaining > cap || !tab.valid(remaining)) return;
      double ms = std::max(ms_so_far, tab.time[static_cast<std::size_t>(remaining)]);
      current[static_cast<std::size_t>(pos)] = remaining;
      if (ms < best_ms || (ms == best_ms && (best_shares.empty() || current < best_shares))) {
        best_ms = ms;
        best_shares = current;
      }
      return;
    }
    int slots_left = p - pos;
    // The largest remaining share is at least the average of what is left.
    std::int64_t min_c = (remaining + slots_left - 1) / slots_left;
    for (std::int64_t c = std::min(cap, remaining); c >= min_c; --c) {
      if (!tab.valid(c)) continue;
      current[static_cast<std::size_t>(pos)] = c;
      self(self, pos + 1, remaining - c, c,
           std::max(ms_so_far, tab.time[static_cast<std::size_t>(c)]));
    }
  };
  rec(rec, 0, tab.granules, tab.granules, 0.0);

  if (best_shares.empty())
    throw InfeasibleError("no feasible assignment: n=" + std::to_string(problem.total) + ", p=" +
                          std::to_string(p) + (problem.allow_idle ? "" : ", idle disallowed"));
  for (std::int64_t& s : best_shares) s *= problem.model.granularity();
  return finish(problem, std::move(best_shares), std::nullopt);
}

std::optional<Improvement> improvement_search(const SpeedFunction& model,
                                              std::int64_t balanced_share) {
  const auto& ss = model.samples();
  auto find = [&](std::int64_t x) {
    auto it = std::lower_bound(ss.begin(), ss.end(), x,
                               [](const SpeedSample& s, std::int64_t v) { return s.x < v; });
    return (it != ss.end() && it->x == x) ? it : ss.end();
  };
  if (find(balanced_share) == ss.end())
    throw DomainError("balanced share " + std::to_string(balanced_share) +
                      " is not a sampled size of the model");

  const double t_bal = eval_time(model, static_cast<double>(balanced_share));
  std::optional<Improvement> best;
  for (const SpeedSample& s : ss) {
    if (s.x <= balanced_share) continue;
    std::int64_t delta = s.x - balanced_share;
    auto partner = find(balanced_share - delta);
    if (partner == ss.end()) continue;
    double t_pair = std::max(eval_time(model, static_cast<double>(s.x)),
                             eval_time(model, static_cast<double>(partner->x)));
    if (t_pair >= t_bal) continue;
    double gain = t_bal - t_pair;
    if (!best || gain > best->gain_s)
      best = Improvement{{balanced_share, s.x}, delta, gain};
  }
  return best;
}

}  // namespace imb
