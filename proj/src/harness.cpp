#include "dofw/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>
#include <thread>

#include "dofw/delay.hpp"
#include "dofw/rng.hpp"
#include "dofw/solvers.hpp"
#include "dofw/vector_ops.hpp"
#include "format_util.hpp"

namespace dofw {

namespace {

double resolve_eta(const ExperimentConfig& cfg, double diameter,
                   double gradient_bound) {
  switch (cfg.eta_rule) {
    case EtaRule::general:
      return eta_general(diameter, gradient_bound, cfg.horizon);
    case EtaRule::strongly_convex_set:
      return eta_strongly_convex_set(diameter, gradient_bound, cfg.horizon);
    case EtaRule::explicit_value:
      return cfg.eta_value;
  }
  throw ConfigError("unreachable eta rule");
}

void record_gap(GapAuditReport& report, double gap, double bound) {
  ++report.checks;
  report.max_gap = std::max(report.max_gap, gap);
  report.min_slack = std::min(report.min_slack, bound - gap);
  if (gap > bound) ++report.violations;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg,
                                const RunOptions& opts) {
  auto started = std::chrono::steady_clock::now();

  auto set = make_set(cfg.set);
  std::uint64_t stream_seed =
      cfg.stream.seed.value_or(derive_seed(cfg.base_seed, "stream"));
  std::uint64_t delay_seed =
      cfg.delays.seed.value_or(derive_seed(cfg.base_seed, "delays"));
  auto stream = make_stream(cfg.stream, *set, cfg.horizon, stream_seed);
  DelaySchedule schedule = make_schedule(cfg.delays, cfg.horizon, delay_seed);

  Vector y1 = cfg.y1 ? *cfg.y1 : set->lmo(Vector(set->dimension(), 0.0));
  if (cfg.y1 && !set->contains(y1))
    throw ConfigError("configured y1 is not feasible");

  const double diameter = set->diameter();
  const double gradient_bound = stream->gradient_bound();

  std::unique_ptr<ConvexOfw> convex;
  std::unique_ptr<StronglyConvexOfw> strongly_convex;
  std::unique_ptr<DelayedOgd> ogd;
  std::unique_ptr<oracle::ReferenceOfwConvex> reference;

  double eta = 0.0;
  switch (cfg.algorithm) {
    case Algorithm::dofw_convex:
      eta = resolve_eta(cfg, diameter, gradient_bound);
      convex = std::make_unique<ConvexOfw>(y1, eta);
      break;
    case Algorithm::dofw_sc: {
      double beta = cfg.solver_beta.value_or(stream->strong_convexity());
      if (!(beta > 0))
        throw ConfigError("dofw_sc requires a strongly convex stream");
      strongly_convex = std::make_unique<StronglyConvexOfw>(y1, beta);
      break;
    }
    case Algorithm::delayed_ogd:
      ogd = std::make_unique<DelayedOgd>(
          set->project(y1),
          diameter / (gradient_bound *
                      std::sqrt(static_cast<double>(cfg.horizon))));
      break;
    case Algorithm::ofw_reference:
      eta = resolve_eta(cfg, diameter, gradient_bound);
      reference = std::make_unique<oracle::ReferenceOfwConvex>(y1, eta);
      break;
  }

  auto play = [&]() -> const Vector& {
    if (convex) return convex->play();
    if (strongly_convex) return strongly_convex->play();
    if (ogd) return ogd->play();
    return reference->play();
  };

  ExperimentResult result;
  result.config = cfg;
  result.realized_max_delay = schedule.max_delay();
  result.rounds.reserve(static_cast<std::size_t>(cfg.horizon));

  GapAuditReport audit;
  // sum of ||y_i||^2 over intermediate decisions seen so far (audit only)
  double audit_ysq = squared_norm(y1);
  const double sc_beta =
      strongly_convex ? strongly_convex->beta() : 0.0;
  const double sc_bound_const =
      16.0 * std::pow(gradient_bound + 2.0 * sc_beta * diameter, 2.0);
  if (opts.audit_surrogate_gap && convex) {
    // tau = 1: no gradient yet, the anchor itself minimizes the surrogate
    Vector ystar = oracle::exact_surrogate_min_convex(
        *set, convex->gradient_sum(), convex->anchor(), eta);
    double gap = squared_norm(subtract(convex->play(), y1)) -
                 squared_norm(subtract(ystar, y1));
    record_gap(audit, gap, 8.0 * diameter * diameter / std::sqrt(3.0));
  }

  FeedbackQueue queue;
  double cum_loss = 0.0;
  long ingested = 0;

  for (long t = 1; t <= cfg.horizon; ++t) {
    const Vector& x = play();
    if (!set->contains(x))
      throw ContractViolation("solver produced an infeasible decision at t=" +
                              std::to_string(t));
    double loss = stream->value(t, x);
    cum_loss += loss;

    queue.enqueue(t, stream->gradient(t, x), schedule.delay(t));
    auto arrivals = queue.drain(t);

    if (ogd) {
      std::vector<Vector> gs;
      gs.reserve(arrivals.size());
      for (auto& [k, g] : arrivals) gs.push_back(std::move(g));
      ogd->step_with(gs, *set);
    } else {
      for (auto& [k, g] : arrivals) {
        if (convex) {
          convex->ingest(g, *set);
          if (opts.audit_surrogate_gap) {
            // F_{tau-1}(y_tau) - F_{tau-1}(y*_tau) <= 8 D^2 / sqrt(tau+2)
            const Vector& y = convex->play();
            const Vector& gbar = convex->gradient_sum();
            Vector ystar = oracle::exact_surrogate_min_convex(
                *set, gbar, convex->anchor(), eta);
            auto surrogate = [&](const Vector& p) {
              return eta * dot(gbar, p) + squared_norm(subtract(p, y1));
            };
            double gap = surrogate(y) - surrogate(ystar);
            double bound = 8.0 * diameter * diameter /
                           std::sqrt(static_cast<double>(convex->tau()) + 2.0);
            record_gap(audit, gap, bound);
          }
        } else if (strongly_convex) {
          // snapshot sum over y_1..y_m before the update appends y_{m+1}
          Vector ysum_before;
          long m = 0;
          if (opts.audit_surrogate_gap) {
            ysum_before = strongly_convex->decision_sum();
            m = strongly_convex->tau();
          }
          strongly_convex->ingest(g, *set);
          if (opts.audit_surrogate_gap) {
            // F_{tau-1}(y_tau) - F_{tau-1}(y*_tau)
            //   <= 16 (G + 2 beta D)^2 (tau-1)^(1/3) / beta,  tau >= 2
            const Vector& y = strongly_convex->play();
            const Vector& gbar = strongly_convex->gradient_sum();
            Vector ystar = oracle::exact_surrogate_min_sc(*set, gbar,
                                                          ysum_before, m,
                                                          sc_beta);
            auto surrogate = [&](const Vector& p) {
              double quad = static_cast<double>(m) * squared_norm(p) -
                            2.0 * dot(p, ysum_before) + audit_ysq;
              return dot(gbar, p) + 0.5 * sc_beta * quad;
            };
            double gap = surrogate(y) - surrogate(ystar);
            double bound = sc_bound_const *
                           std::cbrt(static_cast<double>(m)) / sc_beta;
            record_gap(audit, gap, bound);
            audit_ysq += squared_norm(y);
          }
        } else {
          reference->step(g, *set);
        }
      }
    }
    ingested += static_cast<long>(arrivals.size());

    RoundLog log;
    log.t = t;
    log.loss = loss;
    log.cum_loss = cum_loss;
    log.arrivals = static_cast<long>(arrivals.size());
    log.tau = 1 + ingested;
    result.rounds.push_back(log);
  }

  result.comparator = oracle::offline_comparator(*set, *stream);
  double comparator_cum = 0.0;
  for (RoundLog& log : result.rounds) {
    comparator_cum += stream->value(log.t, result.comparator.x_star);
    log.cum_regret = log.cum_loss - comparator_cum;
  }
  result.final_regret =
      result.rounds.empty() ? 0.0 : result.rounds.back().cum_regret;
  if (opts.audit_surrogate_gap && (convex || strongly_convex))
    result.gap_audit = audit;

  result.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - started)
                       .count();
  return result;
}

void write_rounds_csv(std::ostream& os, const ExperimentResult& result) {
  os << "t,loss,cum_loss,arrivals,tau,cum_regret\n";
  for (const RoundLog& r : result.rounds) {
    os << r.t << "," << format_real(r.loss) << "," << format_real(r.cum_loss)
       << "," << r.arrivals << "," << r.tau << ","
       << format_real(r.cum_regret) << "\n";
  }
}

std::string rounds_csv(const ExperimentResult& result) {
  std::ostringstream ss;
  write_rounds_csv(ss, result);
  return ss.str();
}

std::uint64_t sweep_cell_seed(std::uint64_t base_seed, long horizon, long d) {
  std::uint64_t h = fnv1a64("sweep-cell");
  h = fnv1a64_u64(h, static_cast<std::uint64_t>(horizon));
  h = fnv1a64_u64(h, static_cast<std::uint64_t>(d));
  return base_seed + h;
}

ExperimentConfig sweep_cell_config(const ExperimentConfig& base, long horizon,
                                   long d) {
  ExperimentConfig cfg = base;
  cfg.horizon = horizon;
  cfg.out.clear();
  switch (cfg.delays.kind) {
    case DelaySpec::Kind::fixed:
      cfg.delays.d = d;
      break;
    case DelaySpec::Kind::uniform:
      cfg.delays.d_max = d;
      break;
    case DelaySpec::Kind::bursty:
      cfg.delays.burst = d;
      break;
  }
  cfg.base_seed = sweep_cell_seed(base.base_seed, horizon, d);
  return cfg;
}

std::vector<SweepCell> sweep(const ExperimentConfig& base,
                             const std::vector<long>& horizons,
                             const std::vector<long>& delays, bool parallel) {
  if (horizons.empty() || delays.empty())
    throw ConfigError("sweep needs non-empty T and d lists");

  struct Job {
    long horizon;
    long d;
  };
  std::vector<Job> jobs;
  for (long T : horizons)
    for (long d : delays) jobs.push_back({T, d});

  std::vector<SweepCell> cells(jobs.size());
  auto run_cell = [&](std::size_t i) {
    ExperimentConfig cfg = sweep_cell_config(base, jobs[i].horizon, jobs[i].d);
    ExperimentResult result = run_experiment(cfg);
    SweepCell& cell = cells[i];
    cell.horizon = jobs[i].horizon;
    cell.d_param = jobs[i].d;
    cell.algorithm = algorithm_name(cfg.algorithm);
    cell.set_name = make_set(cfg.set)->name();
    cell.seed = cfg.base_seed;
    cell.realized_max_delay = result.realized_max_delay;
    cell.regret = result.final_regret;
    cell.wall_ms = result.wall_ms;
  };

  unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(jobs.size()));
  if (!parallel || workers <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) run_cell(i);
    return cells;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (std::size_t i = next.fetch_add(1); i < jobs.size();
           i = next.fetch_add(1)) {
        run_cell(i);
      }
    });
  }
  for (std::thread& th : pool) th.join();
  return cells;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepCell>& cells) {
  os << "T,d_max,algo,set,seed,regret,wall_ms\n";
  for (const SweepCell& c : cells) {
    os << c.horizon << "," << c.realized_max_delay << "," << c.algorithm << ","
       << c.set_name << "," << c.seed << "," << format_real(c.regret) << ","
       << format_real(c.wall_ms) << "\n";
  }
}

double fit_slope(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3)
    throw ContractViolation("fit_slope needs at least 3 points");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i].first > points[i - 1].first))
      throw ContractViolation("fit_slope needs strictly increasing T");
  }
  double n = static_cast<double>(points.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& [T, R] : points) {
    double x = std::log(T);
    double y = std::log(std::max(R, 1.0));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace dofw
