#include "dofw/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace dofw {

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::dofw_convex: return "dofw_convex";
    case Algorithm::dofw_sc: return "dofw_sc";
    case Algorithm::delayed_ogd: return "delayed_ogd";
    case Algorithm::ofw_reference: return "ofw_reference";
  }
  return "?";
}

const char* eta_rule_name(EtaRule r) {
  switch (r) {
    case EtaRule::general: return "general";
    case EtaRule::strongly_convex_set: return "strongly_convex_set";
    case EtaRule::explicit_value: return "explicit";
  }
  return "?";
}

namespace {

struct Entry {
  std::string section;
  std::string key;
  std::string value;
  int line;
  bool consumed = false;
};

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ConfigError("config line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<Entry> tokenize(const std::string& text) {
  static const std::vector<std::string> kSections = {"problem", "losses",
                                                     "delays", "run"};
  std::vector<Entry> entries;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string s = trim(raw);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail(line, "unterminated section header");
      section = trim(s.substr(1, s.size() - 2));
      if (std::find(kSections.begin(), kSections.end(), section) ==
          kSections.end())
        fail(line, "unknown section [" + section + "]");
      continue;
    }
    std::size_t eq = s.find('=');
    if (eq == std::string::npos) fail(line, "expected `key = value`");
    if (section.empty()) fail(line, "key outside of any [section]");
    Entry e;
    e.section = section;
    e.key = trim(s.substr(0, eq));
    e.value = trim(s.substr(eq + 1));
    e.line = line;
    if (e.key.empty()) fail(line, "empty key");
    if (e.value.empty()) fail(line, "empty value for key `" + e.key + "`");
    entries.push_back(std::move(e));
  }
  return entries;
}

class Reader {
 public:
  explicit Reader(std::vector<Entry> entries) : entries_(std::move(entries)) {}

  Entry* find(const std::string& section, const std::string& key) {
    Entry* found = nullptr;
    for (Entry& e : entries_) {
      if (e.section == section && e.key == key) {
        if (found != nullptr)
          fail(e.line, "duplicate key `" + key + "` in [" + section + "]");
        found = &e;
      }
    }
    if (found != nullptr) found->consumed = true;
    return found;
  }

  std::optional<std::string> get(const std::string& section,
                                 const std::string& key) {
    Entry* e = find(section, key);
    if (e == nullptr) return std::nullopt;
    return e->value;
  }

  double get_double(const std::string& section, const std::string& key,
                    double fallback) {
    Entry* e = find(section, key);
    if (e == nullptr) return fallback;
    return parse_double(*e);
  }

  long get_long(const std::string& section, const std::string& key,
                long fallback) {
    Entry* e = find(section, key);
    if (e == nullptr) return fallback;
    return parse_long(*e);
  }

  std::optional<std::uint64_t> get_seed(const std::string& section,
                                        const std::string& key) {
    Entry* e = find(section, key);
    if (e == nullptr) return std::nullopt;
    std::uint64_t v = 0;
    auto [p, ec] =
        std::from_chars(e->value.data(), e->value.data() + e->value.size(), v);
    if (ec != std::errc() || p != e->value.data() + e->value.size())
      fail(e->line, "`" + key + "` must be a non-negative integer");
    return v;
  }

  std::optional<Vector> get_vector(const std::string& section,
                                   const std::string& key, long dim) {
    Entry* e = find(section, key);
    if (e == nullptr) return std::nullopt;
    Vector out;
    std::stringstream ss(e->value);
    std::string part;
    while (std::getline(ss, part, ',')) {
      part = trim(part);
      if (part.empty()) fail(e->line, "empty component in `" + key + "`");
      out.push_back(parse_double_str(part, e->line, key));
    }
    if (out.size() == 1 && dim > 1) {
      out.assign(static_cast<std::size_t>(dim), out[0]);  // scalar broadcast
    }
    if (out.size() != static_cast<std::size_t>(dim))
      fail(e->line, "`" + key + "` needs 1 or " + std::to_string(dim) +
                        " comma-separated values");
    return out;
  }

  // first unconsumed key is a typo by construction
  void reject_unknown() const {
    for (const Entry& e : entries_) {
      if (!e.consumed)
        fail(e.line, "unknown key `" + e.key + "` in [" + e.section + "]");
    }
  }

 private:
  static double parse_double_str(const std::string& s, int line,
                                 const std::string& key) {
    try {
      std::size_t pos = 0;
      double v = std::stod(s, &pos);
      if (pos != s.size()) throw std::invalid_argument("trailing characters");
      return v;
    } catch (const std::exception&) {
      fail(line, "`" + key + "` expects a real number, got `" + s + "`");
    }
  }

  static double parse_double(const Entry& e) {
    return parse_double_str(e.value, e.line, e.key);
  }

  static long parse_long(const Entry& e) {
    long v = 0;
    auto [p, ec] =
        std::from_chars(e.value.data(), e.value.data() + e.value.size(), v);
    if (ec != std::errc() || p != e.value.data() + e.value.size())
      fail(e.line, "`" + e.key + "` must be an integer");
    return v;
  }

  std::vector<Entry> entries_;
};

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  Reader r(tokenize(text));
  ExperimentConfig cfg;

  // [problem]
  {
    auto kind = r.get("problem", "set");
    if (!kind) throw ConfigError("config: missing required key `set` in [problem]");
    if (*kind == "l2ball") cfg.set.kind = SetSpec::Kind::l2ball;
    else if (*kind == "box") cfg.set.kind = SetSpec::Kind::box;
    else if (*kind == "simplex") cfg.set.kind = SetSpec::Kind::simplex;
    else throw ConfigError("config: unknown set kind `" + *kind +
                           "` (expected l2ball|box|simplex)");

    cfg.set.dimension = r.get_long("problem", "dimension", cfg.set.dimension);
    if (cfg.set.dimension < 1)
      throw ConfigError("config: dimension must be >= 1");

    switch (cfg.set.kind) {
      case SetSpec::Kind::l2ball:
        cfg.set.radius = r.get_double("problem", "radius", cfg.set.radius);
        cfg.set.center = r.get_vector("problem", "center", cfg.set.dimension);
        break;
      case SetSpec::Kind::box:
        cfg.set.lo = r.get_vector("problem", "lo", cfg.set.dimension);
        cfg.set.hi = r.get_vector("problem", "hi", cfg.set.dimension);
        break;
      case SetSpec::Kind::simplex:
        cfg.set.scale = r.get_double("problem", "scale", cfg.set.scale);
        break;
    }
  }

  // [losses]
  {
    auto kind = r.get("losses", "stream");
    if (!kind)
      throw ConfigError("config: missing required key `stream` in [losses]");
    if (*kind == "linear") cfg.stream.kind = StreamSpec::Kind::linear;
    else if (*kind == "quadratic") cfg.stream.kind = StreamSpec::Kind::quadratic;
    else throw ConfigError("config: unknown stream kind `" + *kind +
                           "` (expected linear|quadratic)");

    if (cfg.stream.kind == StreamSpec::Kind::linear) {
      cfg.stream.gradient_bound =
          r.get_double("losses", "G", cfg.stream.gradient_bound);
      if (!(cfg.stream.gradient_bound > 0))
        throw ConfigError("config: G must be > 0");
      cfg.stream.beta = 0.0;
    } else {
      cfg.stream.beta = r.get_double("losses", "beta", cfg.stream.beta);
      if (!(cfg.stream.beta > 0))
        throw ConfigError("config: quadratic stream needs beta > 0");
    }
    cfg.stream.seed = r.get_seed("losses", "seed");
  }

  // [delays]
  {
    auto kind = r.get("delays", "schedule");
    if (kind) {
      if (*kind == "fixed") cfg.delays.kind = DelaySpec::Kind::fixed;
      else if (*kind == "uniform") cfg.delays.kind = DelaySpec::Kind::uniform;
      else if (*kind == "bursty") cfg.delays.kind = DelaySpec::Kind::bursty;
      else throw ConfigError("config: unknown delay schedule `" + *kind +
                             "` (expected fixed|uniform|bursty)");
    }
    switch (cfg.delays.kind) {
      case DelaySpec::Kind::fixed:
        cfg.delays.d = r.get_long("delays", "d", cfg.delays.d);
        if (cfg.delays.d < 1) throw ConfigError("config: fixed d must be >= 1");
        break;
      case DelaySpec::Kind::uniform:
        cfg.delays.d_max = r.get_long("delays", "d_max", cfg.delays.d_max);
        if (cfg.delays.d_max < 1)
          throw ConfigError("config: d_max must be >= 1");
        break;
      case DelaySpec::Kind::bursty:
        cfg.delays.period = r.get_long("delays", "period", cfg.delays.period);
        cfg.delays.burst = r.get_long("delays", "burst", cfg.delays.burst);
        if (cfg.delays.period < 1 || cfg.delays.burst < 1)
          throw ConfigError("config: bursty period and burst must be >= 1");
        break;
    }
    cfg.delays.seed = r.get_seed("delays", "seed");
  }

  // [run]
  {
    auto algo = r.get("run", "algorithm");
    if (!algo)
      throw ConfigError("config: missing required key `algorithm` in [run]");
    if (*algo == "dofw_convex") cfg.algorithm = Algorithm::dofw_convex;
    else if (*algo == "dofw_sc") cfg.algorithm = Algorithm::dofw_sc;
    else if (*algo == "delayed_ogd") cfg.algorithm = Algorithm::delayed_ogd;
    else if (*algo == "ofw_reference") cfg.algorithm = Algorithm::ofw_reference;
    else throw ConfigError(
        "config: unknown algorithm `" + *algo +
        "` (expected dofw_convex|dofw_sc|delayed_ogd|ofw_reference)");

    cfg.horizon = r.get_long("run", "T", 0);
    if (cfg.horizon < 1)
      throw ConfigError("config: missing or invalid required key `T` in [run]");

    auto rule = r.get("run", "eta_rule");
    if (rule) {
      if (*rule == "general") cfg.eta_rule = EtaRule::general;
      else if (*rule == "strongly_convex_set")
        cfg.eta_rule = EtaRule::strongly_convex_set;
      else if (*rule == "explicit") cfg.eta_rule = EtaRule::explicit_value;
      else throw ConfigError(
          "config: unknown eta_rule `" + *rule +
          "` (expected general|strongly_convex_set|explicit)");
    }
    cfg.eta_value = r.get_double("run", "eta", 0.0);
    if (cfg.eta_rule == EtaRule::explicit_value && !(cfg.eta_value > 0))
      throw ConfigError("config: eta_rule = explicit requires eta > 0");

    if (auto b = r.get("run", "beta")) {
      try {
        cfg.solver_beta = std::stod(*b);
      } catch (const std::exception&) {
        throw ConfigError("config: run beta must be a real number");
      }
    }
    if (auto s = r.get_seed("run", "seed")) cfg.base_seed = *s;
    if (auto o = r.get("run", "out")) cfg.out = *o;
    cfg.y1 = r.get_vector("run", "y1", cfg.set.dimension);
  }

  r.reject_unknown();

  // cross-field compatibility
  if (cfg.algorithm == Algorithm::dofw_sc) {
    if (cfg.stream.kind != StreamSpec::Kind::quadratic ||
        !(cfg.stream.beta > 0))
      throw ConfigError(
          "config: dofw_sc requires a strongly convex stream (beta > 0)");
    if (cfg.solver_beta && *cfg.solver_beta != cfg.stream.beta)
      throw ConfigError(
          "config: run beta does not match the stream's declared modulus");
  }
  if (cfg.algorithm == Algorithm::ofw_reference &&
      (cfg.delays.kind != DelaySpec::Kind::fixed || cfg.delays.d != 1))
    throw ConfigError(
        "config: ofw_reference is the non-delayed baseline; it requires "
        "schedule = fixed with d = 1");
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::vector<std::string> config_warnings(const ExperimentConfig& cfg) {
  std::vector<std::string> warnings;
  if (cfg.eta_rule == EtaRule::strongly_convex_set &&
      cfg.set.kind != SetSpec::Kind::l2ball) {
    warnings.push_back(
        "eta_rule = strongly_convex_set on a set with strong-convexity "
        "modulus 0; the matching rate guarantee does not apply");
  }
  return warnings;
}

std::unique_ptr<FeasibleSet> make_set(const SetSpec& spec) {
  std::size_t n = static_cast<std::size_t>(spec.dimension);
  switch (spec.kind) {
    case SetSpec::Kind::l2ball: {
      Vector center = spec.center.value_or(Vector(n, 0.0));
      return std::make_unique<L2Ball>(std::move(center), spec.radius);
    }
    case SetSpec::Kind::box: {
      Vector lo = spec.lo.value_or(Vector(n, -1.0));
      Vector hi = spec.hi.value_or(Vector(n, 1.0));
      return std::make_unique<Box>(std::move(lo), std::move(hi));
    }
    case SetSpec::Kind::simplex:
      return std::make_unique<Simplex>(n, spec.scale);
  }
  throw ConfigError("unreachable set kind");
}

std::unique_ptr<LossStream> make_stream(const StreamSpec& spec,
                                        const FeasibleSet& set, long horizon,
                                        std::uint64_t resolved_seed) {
  switch (spec.kind) {
    case StreamSpec::Kind::linear:
      return std::make_unique<LinearStream>(horizon, set.dimension(),
                                            spec.gradient_bound, resolved_seed);
    case StreamSpec::Kind::quadratic:
      return std::make_unique<QuadraticStream>(set, horizon, spec.beta,
                                               resolved_seed);
  }
  throw ConfigError("unreachable stream kind");
}

DelaySchedule make_schedule(const DelaySpec& spec, long horizon,
                            std::uint64_t resolved_seed) {
  switch (spec.kind) {
    case DelaySpec::Kind::fixed:
      return DelaySchedule::fixed(horizon, spec.d);
    case DelaySpec::Kind::uniform:
      return DelaySchedule::uniform_random(horizon, spec.d_max, resolved_seed);
    case DelaySpec::Kind::bursty:
      return DelaySchedule::bursty(horizon, spec.period, spec.burst);
  }
  throw ConfigError("unreachable delay kind");
}

}  // namespace dofw
