#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "imbalance/fpm.hpp"

namespace imb {

/// Distribute `total` workload units across `processors` identical
/// processing units sharing one empirical speed function. Every share must
/// be a multiple of the model granularity; a share of 0 (idle processor)
/// is legal only when `allow_idle` is set.
struct PartitionProblem {
  std::int64_t total = 0;
  int processors = 2;
  SpeedFunction model;
  bool allow_idle = false;
};

/// A concrete assignment with its predicted per-processor times. The
/// makespan is the maximum per-processor time; `offset` is the deviation
/// from the balanced share for paired solutions, absent otherwise.
struct Partition {
  std::vector<std::int64_t> shares;
  std::vector<double> per_time;  // seconds, per_time[i] = t(shares[i])
  double makespan = 0.0;         // seconds
  std::optional<std::int64_t> offset;
};

inline constexpr std::int64_t kDefaultOracleCap = 10'000'000;

/// Predicted times for a given share vector; no optimization performed.
/// Shares of 0 are treated as idle. Throws RangeError for shares outside
/// the model's evaluable range.
Partition predict_makespan(const SpeedFunction& model, std::span<const std::int64_t> shares);

/// Symmetric paired search around the balanced share n/p: offsets
/// k*granularity are tried with half the processors at n/p + k*g and half
/// at n/p - k*g, keeping the offset with the smallest predicted makespan
/// (ties resolve toward the most balanced offset). Even-indexed processors
/// receive the smaller share. Requires p even and n/p a multiple of the
/// granularity.
Partition partition_paired(const PartitionProblem& problem);

/// Exact makespan minimization over all granularity-aligned share
/// multisets summing to n, for any p >= 1, via dynamic programming.
/// Returns shares sorted non-increasing; among optima the lexicographically
/// smallest sorted vector is chosen.
Partition partition_general(const PartitionProblem& problem);

/// Exhaustive enumeration of all share multisets; the verification oracle
/// for the other partitioners. Throws TooLargeError when the composition
/// count exceeds `max_compositions`.
Partition brute_force_oracle(const PartitionProblem& problem,
                             std::int64_t max_compositions = kDefaultOracleCap);

/// A profitable symmetric deviation from a balanced share, if one exists.
struct Improvement {
  std::pair<std::int64_t, std::int64_t> violating_pair;  // (balanced, balanced + delta)
  std::int64_t delta = 0;  // offset in units
  double gain_s = 0.0;     // t(balanced) - max(t(balanced+delta), t(balanced-delta))
};

/// Scans sampled symmetric pairs around `balanced_share` for a deviation
/// that strictly lowers the pair makespan; absence means load balancing is
/// locally optimal at this point. `balanced_share` must be a sampled x.
std::optional<Improvement> improvement_search(const SpeedFunction& model,
                                              std::int64_t balanced_share);

}  // namespace imb
