#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace imb {

/// 3-D grid of n x m x l cells surrounded by a ghost zone of `halo` cells
/// on every face. All stencil stages reach at most one cell per axis, so
/// any halo >= 1 produces identical interior results.
struct StencilDomain {
  std::int64_t n = 3;
  std::int64_t m = 3;
  std::int64_t l = 3;
  std::int64_t halo = 1;

  std::int64_t cells() const { return n * m * l; }
  std::int64_t sn() const { return n + 2 * halo; }
  std::int64_t sm() const { return m + 2 * halo; }
  std::int64_t sl() const { return l + 2 * halo; }
  std::int64_t storage() const { return sn() * sm() * sl(); }
  void validate() const;  // extents >= 3, halo >= 1
};

/// Dense double-precision field over a domain including its halo.
/// Interior coordinates run over [0, n) x [0, m) x [0, l); the halo extends
/// each axis to [-halo, extent + halo).
class GridField {
 public:
  explicit GridField(const StencilDomain& d);

  const StencilDomain& domain() const { return domain_; }

  double& at(std::int64_t i, std::int64_t j, std::int64_t k) { return data_[index(i, j, k)]; }
  double at(std::int64_t i, std::int64_t j, std::int64_t k) const { return data_[index(i, j, k)]; }

  std::size_t index(std::int64_t i, std::int64_t j, std::int64_t k) const {
    return static_cast<std::size_t>(((i + domain_.halo) * domain_.sm() + (j + domain_.halo)) *
                                    domain_.sl() + (k + domain_.halo));
  }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  bool halo_valid = false;

 private:
  StencilDomain domain_;
  std::vector<double> data_;
};

/// The five input fields of one pipeline step: the advected quantity x and
/// four coefficient fields that stay fixed across steps.
struct InputFields {
  GridField x, u, v, w, rho;
};

/// Deterministic pseudo-random initialization: the value of every cell is
/// a pure function of (seed, field, i, j, k), so identical seed and domain
/// reproduce bit-identical fields, halos included.
InputFields init_fields(const StencilDomain& domain, std::uint64_t seed);

/// Copies the nearest interior value into every halo cell.
void fill_halo_clamped(GridField& f);

/// Seven-point max stencil over interior cells:
/// out[i,j,k] = max(in at (i,j,k) and its 6 face neighbors).
void stage_max7(const GridField& in, GridField& out);

/// Min variant of the seven-point stencil.
void stage_min7(const GridField& in, GridField& out);

/// One full pipeline step on a single thread: two linear 7-point stages,
/// the 7-point max and min stages, and a pointwise combination. Returns
/// the output field with its halo refilled, ready to feed the next step.
/// Throws ContractError when any input halo is unfilled.
GridField run_step(const InputFields& fields, const StencilDomain& domain);

/// FNV-1a 64-bit hash of the interior cell bit patterns in (i, j, k) order.
std::uint64_t checksum(const GridField& f);

std::string checksum_hex(std::uint64_t sum);

/// Total-thread budget: IMBALANCE_THREAD_CAP when set, otherwise
/// max(8, 2 x hardware threads).
int thread_cap();

/// A team of worker threads advancing one sub-domain through pipeline
/// steps, partitioning the m dimension into contiguous slabs. Buffers are
/// allocated once; reset() restores the seeded state between trials.
class TeamRunner {
 public:
  TeamRunner(const StencilDomain& domain, int threads, std::uint64_t seed,
             int pin_base_core = -1);

  void reset();

  /// Runs `steps` pipeline steps on the team's threads and returns the
  /// team compute time in seconds: the sum over steps of the span between
  /// step start and the completion of the team's last stage, which
  /// excludes any wait inside the sync hooks. `start_sync`, `step_sync`
  /// and `end_sync`, when set, are invoked by every worker thread before
  /// timing starts, after every step, and after the last step.
  double run(int steps, const std::function<void()>& start_sync = {},
             const std::function<void()>& step_sync = {},
             const std::function<void()>& end_sync = {});

  std::uint64_t current_checksum() const { return checksum(fields_.x); }
  const StencilDomain& domain() const { return domain_; }
  int threads() const { return threads_; }

 private:
  StencilDomain domain_;
  int threads_;
  int pin_base_core_;
  InputFields fields_;
  std::vector<double> x0_;  // pristine copy of x for reset()
  GridField g1_, g2_, mx_, mn_;
};

struct TeamResult {
  double seconds = 0.0;
  std::uint64_t checksum = 0;
};

/// Convenience wrapper: run one team over `steps` steps and report its
/// compute time and output checksum. The checksum depends only on
/// (domain, seed, steps), never on the thread count.
TeamResult run_team_workload(const StencilDomain& domain, int threads, int steps,
                             std::uint64_t seed = 42);

}  // namespace imb
