#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dofw/config.hpp"
#include "dofw/oracle.hpp"

namespace dofw {

struct RoundLog {
  long t = 0;
  double loss = 0.0;
  double cum_loss = 0.0;
  long arrivals = 0;   // |F_t|
  long tau = 0;        // after the round: 1 + gradients ingested so far
  double cum_regret = 0.0;
};

// Per-update surrogate-gap audit against the exact minimizers.
struct GapAuditReport {
  long checks = 0;
  long violations = 0;
  double max_gap = 0.0;
  // min over checks of (bound - gap); negative iff a violation occurred
  double min_slack = std::numeric_limits<double>::infinity();
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<RoundLog> rounds;
  double final_regret = 0.0;
  long realized_max_delay = 0;  // max d_t; reported, never fed to the solver
  double wall_ms = 0.0;
  oracle::ComparatorResult comparator;
  std::optional<GapAuditReport> gap_audit;
};

struct RunOptions {
  // check the per-update surrogate gap bound every ingest
  // (dofw_convex / dofw_sc only)
  bool audit_surrogate_gap = false;
};

// Full round loop: play -> record loss -> query gradient -> enqueue ->
// drain -> ingest arrivals in ascending query order.  Fully deterministic
// given the config.
ExperimentResult run_experiment(const ExperimentConfig& cfg,
                                const RunOptions& opts = {});

// columns: t,loss,cum_loss,arrivals,tau,cum_regret
void write_rounds_csv(std::ostream& os, const ExperimentResult& result);
std::string rounds_csv(const ExperimentResult& result);

struct SweepCell {
  long horizon = 0;
  long d_param = 0;  // the swept delay parameter
  std::string algorithm;
  std::string set_name;
  std::uint64_t seed = 0;
  long realized_max_delay = 0;
  double regret = 0.0;
  double wall_ms = 0.0;
};

// Per-cell seed: base seed plus a stable hash of (T, d), so results do not
// depend on execution order or parallelism.
std::uint64_t sweep_cell_seed(std::uint64_t base_seed, long horizon, long d);
ExperimentConfig sweep_cell_config(const ExperimentConfig& base, long horizon,
                                   long d);

// Grid of experiments over horizons x delay parameters.  Parallel and
// serial execution produce identical cells.
std::vector<SweepCell> sweep(const ExperimentConfig& base,
                             const std::vector<long>& horizons,
                             const std::vector<long>& delays,
                             bool parallel = true);

// columns: T,d_max,algo,set,seed,regret,wall_ms
void write_sweep_csv(std::ostream& os, const std::vector<SweepCell>& cells);

// Least-squares slope of log(max(R,1)) against log(T).  Needs >= 3 points
// with strictly increasing T.
double fit_slope(const std::vector<std::pair<double, double>>& points);

}  // namespace dofw
