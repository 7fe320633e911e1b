#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "dofw/harness.hpp"
#include "dofw/rng.hpp"

using namespace dofw;

namespace {

const char* kMinimalConfig = R"(
[problem]
set = box

[losses]
stream = linear

[run]
algorithm = dofw_convex
T = 100
)";

ExperimentConfig small_config() {
  ExperimentConfig cfg = parse_config(kMinimalConfig);
  cfg.horizon = 64;
  return cfg;
}

}  // namespace

TEST_CASE("minimal config gets documented defaults") {
  ExperimentConfig cfg = parse_config(kMinimalConfig);
  CHECK(cfg.set.kind == SetSpec::Kind::box);
  CHECK(cfg.set.dimension == 10);
  CHECK(cfg.stream.kind == StreamSpec::Kind::linear);
  CHECK(cfg.stream.gradient_bound == 1.0);
  CHECK(cfg.delays.kind == DelaySpec::Kind::fixed);
  CHECK(cfg.delays.d == 1);
  CHECK(cfg.algorithm == Algorithm::dofw_convex);
  CHECK(cfg.horizon == 100);
  CHECK(cfg.eta_rule == EtaRule::general);
  CHECK(cfg.base_seed == 1);
  CHECK(cfg.out.empty());
}

TEST_CASE("unknown keys are rejected with the key name and line") {
  std::string text = R"([problem]
set = box

[delays]
delya = 5

[losses]
stream = linear

[run]
algorithm = dofw_convex
T = 10
)";
  try {
    parse_config(text);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    std::string msg = e.what();
    CHECK(msg.find("delya") != std::string::npos);
    CHECK(msg.find("line 5") != std::string::npos);
  }
}

TEST_CASE("config compatibility checks") {
  // dofw_sc on a linear (beta = 0) stream
  CHECK_THROWS_AS(parse_config(R"(
[problem]
set = box
[losses]
stream = linear
[run]
algorithm = dofw_sc
T = 10
)"),
                  ConfigError);

  // missing required T
  CHECK_THROWS_AS(parse_config(R"(
[problem]
set = box
[losses]
stream = linear
[run]
algorithm = dofw_convex
)"),
                  ConfigError);

  // unknown section
  CHECK_THROWS_AS(parse_config("[delay]\nd = 3\n"), ConfigError);

  // solver beta must match the stream's declared modulus
  CHECK_THROWS_AS(parse_config(R"(
[problem]
set = box
[losses]
stream = quadratic
beta = 1.0
[run]
algorithm = dofw_sc
beta = 2.0
T = 10
)"),
                  ConfigError);

  // ofw_reference demands fixed(1)
  CHECK_THROWS_AS(parse_config(R"(
[problem]
set = box
[losses]
stream = linear
[delays]
schedule = fixed
d = 4
[run]
algorithm = ofw_reference
T = 10
)"),
                  ConfigError);

  // eta rule warning on a set that is not strongly convex
  ExperimentConfig cfg = parse_config(kMinimalConfig);
  cfg.eta_rule = EtaRule::strongly_convex_set;
  CHECK(config_warnings(cfg).size() == 1);
  cfg.set.kind = SetSpec::Kind::l2ball;
  CHECK(config_warnings(cfg).empty());
}

TEST_CASE("single-round run") {
  ExperimentConfig cfg = small_config();
  cfg.horizon = 1;
  ExperimentResult result = run_experiment(cfg);
  REQUIRE(result.rounds.size() == 1);
  CHECK(result.rounds[0].arrivals == 1);
  CHECK(result.rounds[0].tau == 2);
  // R(1) = f_1(y_1) - min_x f_1(x)
  CHECK(result.final_regret ==
        doctest::Approx(result.rounds[0].loss - result.comparator.offline_total)
            .epsilon(1e-12));
}

TEST_CASE("starved solver plays y1 forever") {
  ExperimentConfig cfg = small_config();
  cfg.horizon = 32;
  cfg.delays.d = 1000;  // no gradient ever arrives
  ExperimentResult result = run_experiment(cfg);
  for (const RoundLog& r : result.rounds) {
    CHECK(r.arrivals == 0);
    CHECK(r.tau == 1);
  }
  // every round sees the same decision, so each round's loss is f_t(y1)
  CHECK(result.realized_max_delay == 1000);
}

TEST_CASE("per-round CSV accounting is self-consistent") {
  ExperimentConfig cfg = small_config();
  cfg.delays.kind = DelaySpec::Kind::uniform;
  cfg.delays.d_max = 7;
  ExperimentResult result = run_experiment(cfg);

  double cum = 0.0;
  long ingested = 0;
  for (const RoundLog& r : result.rounds) {
    cum += r.loss;
    ingested += r.arrivals;
    CHECK(std::abs(r.cum_loss - cum) <=
          1e-9 * std::max(1.0, std::abs(cum)));
    CHECK(r.tau == 1 + ingested);
  }
  CHECK(result.final_regret == result.rounds.back().cum_regret);
}

TEST_CASE("identical configs give byte-identical CSV") {
  ExperimentConfig cfg = small_config();
  cfg.delays.kind = DelaySpec::Kind::uniform;
  cfg.delays.d_max = 9;
  std::string a = rounds_csv(run_experiment(cfg));
  std::string b = rounds_csv(run_experiment(cfg));
  CHECK(a == b);
  CHECK(a.rfind("t,loss,cum_loss,arrivals,tau,cum_regret\n", 0) == 0);
}

TEST_CASE("every algorithm runs under every schedule") {
  for (Algorithm algo : {Algorithm::dofw_convex, Algorithm::dofw_sc,
                         Algorithm::delayed_ogd, Algorithm::ofw_reference}) {
    ExperimentConfig cfg = small_config();
    cfg.algorithm = algo;
    if (algo == Algorithm::dofw_sc) {
      cfg.stream.kind = StreamSpec::Kind::quadratic;
      cfg.stream.beta = 1.0;
    }
    if (algo != Algorithm::ofw_reference) {
      cfg.delays.kind = DelaySpec::Kind::bursty;
      cfg.delays.period = 5;
      cfg.delays.burst = 11;
    }
    ExperimentResult result = run_experiment(cfg);
    CHECK(result.rounds.size() == static_cast<std::size_t>(cfg.horizon));
    CHECK(std::isfinite(result.final_regret));
  }
}

TEST_CASE("fit_slope on exact and noisy power laws") {
  std::vector<std::pair<double, double>> linear, three_quarters;
  for (double T : {512.0, 1024.0, 2048.0, 4096.0, 8192.0}) {
    linear.emplace_back(T, 3.0 * T);
    three_quarters.emplace_back(T, 2.0 * std::pow(T, 0.75));
  }
  CHECK(fit_slope(linear) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(fit_slope(three_quarters) == doctest::Approx(0.75).epsilon(1e-9));

  // sqrt law with +-1% multiplicative noise lands near 0.5
  Rng rng(2718);
  std::vector<std::pair<double, double>> noisy;
  for (double T : {1024.0, 2048.0, 4096.0, 8192.0, 16384.0, 32768.0}) {
    double noise = 1.0 + rng.uniform(-0.01, 0.01);
    noisy.emplace_back(T, 5.0 * std::sqrt(T) * noise);
  }
  double slope = fit_slope(noisy);
  CHECK(slope >= 0.45);
  CHECK(slope <= 0.55);

  CHECK_THROWS_AS(fit_slope({{1.0, 1.0}, {2.0, 2.0}}), ContractViolation);
  CHECK_THROWS_AS(fit_slope({{2.0, 1.0}, {2.0, 2.0}, {1.0, 3.0}}),
                  ContractViolation);
}

TEST_CASE("sweep: single cell equals run_experiment") {
  ExperimentConfig cfg = small_config();
  auto cells = sweep(cfg, {64}, {3}, /*parallel=*/false);
  REQUIRE(cells.size() == 1);
  ExperimentConfig cell_cfg = sweep_cell_config(cfg, 64, 3);
  ExperimentResult direct = run_experiment(cell_cfg);
  CHECK(cells[0].regret == direct.final_regret);
  CHECK(cells[0].seed == cell_cfg.base_seed);
  CHECK(cells[0].realized_max_delay == direct.realized_max_delay);
}

TEST_CASE("parallel sweep equals serial sweep cell-for-cell") {
  ExperimentConfig cfg = small_config();
  cfg.delays.kind = DelaySpec::Kind::uniform;
  std::vector<long> horizons = {32, 64, 128};
  std::vector<long> delays = {1, 4, 16};
  auto serial = sweep(cfg, horizons, delays, /*parallel=*/false);
  auto parallel = sweep(cfg, horizons, delays, /*parallel=*/true);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].horizon == parallel[i].horizon);
    CHECK(serial[i].d_param == parallel[i].d_param);
    CHECK(serial[i].seed == parallel[i].seed);
    CHECK(serial[i].regret == parallel[i].regret);  // bitwise
    CHECK(serial[i].realized_max_delay == parallel[i].realized_max_delay);
  }
}

TEST_CASE("gap audit reports zero violations on a small run") {
  ExperimentConfig cfg = small_config();
  cfg.horizon = 128;
  RunOptions opts;
  opts.audit_surrogate_gap = true;
  ExperimentResult result = run_experiment(cfg, opts);
  REQUIRE(result.gap_audit.has_value());
  CHECK(result.gap_audit->checks > 0);
  CHECK(result.gap_audit->violations == 0);
}
