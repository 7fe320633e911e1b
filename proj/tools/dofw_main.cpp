// Command-line front end: run a single experiment, sweep a (T, d) grid, or
// re-run an experiment while auditing the per-update surrogate-gap bounds.
#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dofw/harness.hpp"
#include "dofw/kernels.hpp"
#include "format_util.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitInvariantViolation = 3;

std::vector<long> parse_long_list(const std::string& csv, const char* what) {
  std::vector<long> out;
  std::stringstream ss(csv);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      out.push_back(std::stol(part));
    } catch (const std::exception&) {
      throw dofw::ConfigError(std::string(what) + ": bad integer `" + part +
                              "`");
    }
  }
  if (out.empty())
    throw dofw::ConfigError(std::string(what) + ": empty list");
  return out;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw dofw::ConfigError("cannot open output file: " + path);
  out << contents;
}

dofw::ExperimentConfig load_config(const std::string& path,
                                   const std::optional<std::uint64_t>& seed,
                                   const std::string& out_override) {
  dofw::ExperimentConfig cfg = dofw::parse_config_file(path);
  if (seed) cfg.base_seed = *seed;
  if (!out_override.empty()) cfg.out = out_override;
  for (const std::string& w : dofw::config_warnings(cfg))
    std::cerr << "warning: " << w << "\n";
  return cfg;
}

void print_summary(const dofw::ExperimentResult& r) {
  std::cout << "algorithm     " << dofw::algorithm_name(r.config.algorithm)
            << "\n"
            << "set           " << dofw::make_set(r.config.set)->name() << " (n="
            << r.config.set.dimension << ")\n"
            << "T             " << r.config.horizon << "\n"
            << "d (realized)  " << r.realized_max_delay << "\n"
            << "seed          " << r.config.base_seed << "\n"
            << "regret R(T)   " << dofw::format_real(r.final_regret) << "\n"
            << "comparator    " << dofw::oracle::method_name(r.comparator.method)
            << " (certified gap " << dofw::format_real(r.comparator.certified_gap)
            << ")\n"
            << "kernels       "
            << dofw::kernels::backend_name(dofw::kernels::active_backend())
            << "\n"
            << "wall ms       " << dofw::format_real(r.wall_ms) << "\n";
}

int cmd_run(const std::string& config_path,
            const std::optional<std::uint64_t>& seed,
            const std::string& out_override, const std::string& dump_stream,
            const std::string& dump_delays) {
  dofw::ExperimentConfig cfg = load_config(config_path, seed, out_override);

  if (!dump_stream.empty() || !dump_delays.empty()) {
    auto set = dofw::make_set(cfg.set);
    std::uint64_t stream_seed = cfg.stream.seed.value_or(
        dofw::derive_seed(cfg.base_seed, "stream"));
    std::uint64_t delay_seed = cfg.delays.seed.value_or(
        dofw::derive_seed(cfg.base_seed, "delays"));
    if (!dump_stream.empty()) {
      auto stream =
          dofw::make_stream(cfg.stream, *set, cfg.horizon, stream_seed);
      std::ostringstream ss;
      stream->dump_csv(ss);
      write_file(dump_stream, ss.str());
    }
    if (!dump_delays.empty()) {
      auto schedule = dofw::make_schedule(cfg.delays, cfg.horizon, delay_seed);
      std::ostringstream ss;
      schedule.dump_csv(ss);
      write_file(dump_delays, ss.str());
    }
  }

  dofw::ExperimentResult result = dofw::run_experiment(cfg);
  if (!cfg.out.empty()) write_file(cfg.out, dofw::rounds_csv(result));
  print_summary(result);
  return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& t_csv,
              const std::string& d_csv, const std::string& out_path,
              bool serial) {
  dofw::ExperimentConfig cfg = load_config(config_path, std::nullopt, "");
  std::vector<long> horizons = parse_long_list(t_csv, "--T");
  std::vector<long> delays = parse_long_list(d_csv, "--d");
  std::vector<dofw::SweepCell> cells =
      dofw::sweep(cfg, horizons, delays, !serial);
  std::ostringstream ss;
  dofw::write_sweep_csv(ss, cells);
  if (out_path.empty()) {
    std::cout << ss.str();
  } else {
    write_file(out_path, ss.str());
    std::cout << "wrote " << cells.size() << " cells to " << out_path << "\n";
  }
  return 0;
}

int cmd_gapcheck(const std::string& config_path,
                 const std::optional<std::uint64_t>& seed) {
  dofw::ExperimentConfig cfg = load_config(config_path, seed, "");
  if (cfg.algorithm != dofw::Algorithm::dofw_convex &&
      cfg.algorithm != dofw::Algorithm::dofw_sc) {
    throw dofw::ConfigError(
        "gapcheck applies to dofw_convex or dofw_sc configurations");
  }
  if (cfg.algorithm == dofw::Algorithm::dofw_convex &&
      cfg.eta_rule != dofw::EtaRule::general) {
    std::cerr << "warning: the convex gap bound is stated for the general "
                 "eta rule; other rules may violate it\n";
  }
  dofw::RunOptions opts;
  opts.audit_surrogate_gap = true;
  dofw::ExperimentResult result = dofw::run_experiment(cfg, opts);
  const dofw::GapAuditReport& audit = *result.gap_audit;
  std::cout << "surrogate-gap audit: " << audit.checks << " checks, "
            << audit.violations << " violations\n"
            << "max gap    " << dofw::format_real(audit.max_gap) << "\n"
            << "min slack  " << dofw::format_real(audit.min_slack) << "\n";
  if (audit.violations > 0) {
    std::cerr << "gapcheck: bound violated\n";
    return kExitInvariantViolation;
  }
  print_summary(result);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"delayed online Frank-Wolfe experiment runner"};
  app.require_subcommand(1);

  std::string config_path, out_path, dump_stream, dump_delays;
  std::string t_csv, d_csv;
  std::optional<std::uint64_t> seed;
  bool serial = false;

  CLI::App* run = app.add_subcommand("run", "run one experiment");
  run->add_option("--config", config_path, "config file")->required();
  run->add_option("--out", out_path, "per-round CSV path (overrides config)");
  run->add_option("--seed", seed, "override the base seed");
  run->add_option("--dump-stream", dump_stream,
                  "write the stream's per-round parameters as CSV");
  run->add_option("--dump-delays", dump_delays,
                  "write the realized delay sequence as CSV");

  CLI::App* sw = app.add_subcommand("sweep", "grid of experiments over T x d");
  sw->add_option("--config", config_path, "config file")->required();
  sw->add_option("--T", t_csv, "comma-separated horizons")->required();
  sw->add_option("--d", d_csv, "comma-separated delay parameters")->required();
  sw->add_option("--out", out_path, "summary CSV path (default: stdout)");
  sw->add_flag("--serial", serial, "run cells sequentially");

  CLI::App* gap = app.add_subcommand(
      "gapcheck", "run while asserting the per-update surrogate-gap bounds");
  gap->add_option("--config", config_path, "config file")->required();
  gap->add_option("--seed", seed, "override the base seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed())
      return cmd_run(config_path, seed, out_path, dump_stream, dump_delays);
    if (sw->parsed()) return cmd_sweep(config_path, t_csv, d_csv, out_path, serial);
    return cmd_gapcheck(config_path, seed);
  } catch (const dofw::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const dofw::ContractViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariantViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
