#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dofw/common.hpp"
#include "dofw/delay.hpp"
#include "dofw/geometry.hpp"
#include "dofw/losses.hpp"

namespace dofw {

struct SetSpec {
  enum class Kind { l2ball, box, simplex };
  Kind kind = Kind::box;
  long dimension = 10;
  // l2ball
  double radius = 1.0;
  std::optional<Vector> center;  // default: origin
  // box; scalars broadcast across dimensions
  std::optional<Vector> lo;  // default: -1
  std::optional<Vector> hi;  // default: +1
  // simplex
  double scale = 1.0;
};

struct StreamSpec {
  enum class Kind { linear, quadratic };
  Kind kind = Kind::linear;
  double gradient_bound = 1.0;  // linear only; quadratic derives G = beta*D
  double beta = 1.0;            // quadratic only
  std::optional<std::uint64_t> seed;  // default: derived from run seed
};

struct DelaySpec {
  enum class Kind { fixed, uniform, bursty };
  Kind kind = Kind::fixed;
  long d = 1;        // fixed
  long d_max = 1;    // uniform
  long period = 1;   // bursty
  long burst = 1;    // bursty
  std::optional<std::uint64_t> seed;  // uniform only
};

enum class Algorithm { dofw_convex, dofw_sc, delayed_ogd, ofw_reference };
enum class EtaRule { general, strongly_convex_set, explicit_value };

const char* algorithm_name(Algorithm a);
const char* eta_rule_name(EtaRule r);

struct ExperimentConfig {
  SetSpec set;
  StreamSpec stream;
  DelaySpec delays;
  Algorithm algorithm = Algorithm::dofw_convex;
  long horizon = 0;  // T, required
  EtaRule eta_rule = EtaRule::general;
  double eta_value = 0.0;               // with eta_rule = explicit
  std::optional<double> solver_beta;    // dofw_sc; must match the stream
  std::uint64_t base_seed = 1;
  std::string out;                      // per-round CSV path; empty = none
  std::optional<Vector> y1;             // initial decision override
};

// Parses the documented [section] / key = value format.  Unknown sections
// or keys are errors; every diagnostic carries a line number.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

// Non-fatal advisories (e.g. strongly_convex_set eta rule on a set with
// strong-convexity modulus zero).
std::vector<std::string> config_warnings(const ExperimentConfig& cfg);

// Factories used by the harness.
std::unique_ptr<FeasibleSet> make_set(const SetSpec& spec);
std::unique_ptr<LossStream> make_stream(const StreamSpec& spec,
                                        const FeasibleSet& set, long horizon,
                                        std::uint64_t resolved_seed);
DelaySchedule make_schedule(const DelaySpec& spec, long horizon,
                            std::uint64_t resolved_seed);

}  // namespace dofw
