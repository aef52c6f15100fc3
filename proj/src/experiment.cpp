#include "univalent/experiment.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "univalent/report_json.hpp"
#include "univalent/reproduce.hpp"
#include "univalent/series_io.hpp"

namespace univalent {

using nlohmann::json;

namespace {

const std::vector<std::string> kTasks{"check", "verify", "scan", "cesaro", "reproduce", "curve"};
const std::vector<std::string> kVerifiers{"starlike",    "convex",  "close-to-convex", "typically-real",
                                          "prestarlike", "r-gamma"};

bool one_of(const std::string& v, const std::vector<std::string>& options) {
  return std::find(options.begin(), options.end(), v) != options.end();
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::size_t source_count(const ExperimentConfig& c) {
  return static_cast<std::size_t>(c.input_file.has_value()) + c.coefficients.has_value() +
         c.generator.has_value();
}

Functional parse_functional(const std::string& name) {
  if (name == "starlike") return Functional::kStarlike;
  if (name == "convex") return Functional::kConvex;
  if (name == "rgamma" || name == "r-gamma") return Functional::kRGamma;
  throw std::invalid_argument("unknown functional '" + name + "' (starlike, convex, rgamma)");
}

CesaroParams cesaro_params(const ExperimentConfig& c) {
  require(c.n.has_value(), "Cesaro parameters need n");
  if (c.delta) return CesaroParams::classical(*c.delta, *c.n);
  require(c.b.has_value() && c.c.has_value(), "Cesaro parameters need b and c, or delta");
  return CesaroParams(*c.b, *c.c, *c.n);
}

StarlikeReference parse_reference(const std::string& text) {
  try {
    return parse_starlike(text);
  } catch (const std::invalid_argument&) {
    return parse_inline_coefficients(text);
  }
}

std::string iso_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
void read_value(const json& j, T& out, const std::string& key) {
  try {
    out = j.get<T>();
  } catch (const json::exception&) {
    throw std::invalid_argument("config key '" + key + "' has the wrong type");
  }
}

template <class T>
void read_optional(const json& j, std::optional<T>& out, const std::string& key) {
  if (j.is_null()) {
    out.reset();
    return;
  }
  T v{};
  read_value(j, v, key);
  out = v;
}

}  // namespace

void ExperimentConfig::validate() const {
  require(one_of(task, kTasks), "unknown task '" + task + "'");
  require(format == "json" || format == "csv", "format must be json or csv");
  require(truncate >= 1, "truncate must be at least 1");
  require(std::isfinite(tolerance) && tolerance >= 0.0, "tolerance must be finite and nonnegative");
  grid.validate();
  require(std::abs(eta) < std::numbers::pi / 2.0, "eta must satisfy |eta| < pi/2");
  require(order >= 0.0 && order < 1.0, "close-to-convex order must lie in [0, 1)");
  require(!(delta && (b || c)), "give either delta or b and c, not both");
  require(source_count(*this) <= 1, "give at most one of input file, inline coefficients, generator");
  if (n) require(*n >= 1, "n must be positive");

  const bool has_input = source_count(*this) == 1;
  if (task == "check") {
    require(criterion.has_value(), "check needs a criterion");
    const Criterion id = parse_criterion(*criterion);
    if (is_cesaro(id)) require(n && (delta || (b && c)), "Cesaro criteria need n and b, c (or delta)");
    if (id != Criterion::kCesaroPrestarlike) require(has_input, "check needs coefficients");
  } else if (task == "verify") {
    require(verifier.has_value() && one_of(*verifier, kVerifiers),
            "verify needs one of: starlike, convex, close-to-convex, typically-real, prestarlike, r-gamma");
    require(has_input, "verify needs coefficients");
  } else if (task == "scan") {
    require(scan_kind == "sine" || scan_kind == "cosine", "scan kind must be sine or cosine");
    require(has_input, "scan needs coefficients or the vietoris generator");
    if (generator && *generator == "vietoris") require(n.has_value(), "the vietoris scan needs n");
  } else if (task == "cesaro") {
    require(has_input, "cesaro needs coefficients");
    require(n && (delta || (b && c)), "cesaro needs n and b, c (or delta)");
  } else if (task == "curve") {
    require(has_input, "curve needs coefficients");
    require(radius > 0.0 && radius < 1.0, "curve radius must lie in (0, 1)");
    require(curve_angles >= 1, "curve needs at least one angle");
    (void)parse_functional(functional);
  } else if (task == "reproduce") {
    require(suite == "all" || one_of(suite, reproduce_suites()), "unknown suite '" + suite + "'");
  }
}

void to_json(json& j, const ExperimentConfig& c) {
  j = json{{"task", c.task},
           {"criterion", optional_json(c.criterion)},
           {"verifier", optional_json(c.verifier)},
           {"suite", c.suite},
           {"params", c.params},
           {"b", optional_json(c.b)},
           {"c", optional_json(c.c)},
           {"delta", optional_json(c.delta)},
           {"n", optional_json(c.n)},
           {"input_file", optional_json(c.input_file)},
           {"coefficients", optional_json(c.coefficients)},
           {"generator", optional_json(c.generator)},
           {"truncate", c.truncate},
           {"grid", c.grid},
           {"tolerance", c.tolerance},
           {"reference", c.reference},
           {"eta", c.eta},
           {"order", c.order},
           {"scan_kind", c.scan_kind},
           {"b0", c.b0},
           {"theta_count", optional_json(c.theta_count)},
           {"functional", c.functional},
           {"radius", c.radius},
           {"curve_angles", c.curve_angles},
           {"format", c.format},
           {"seed", c.seed},
           {"proof_ranges", c.proof_ranges},
           {"cross_verify", c.cross_verify},
           {"timestamp", c.timestamp},
           {"out", optional_json(c.out)}};
}

void from_json(const json& j, ExperimentConfig& c) {
  require(j.is_object(), "config must be a JSON object");
  using Setter = std::function<void(const json&, const std::string&)>;
  const std::map<std::string, Setter> setters{
      {"task", [&](const json& v, const std::string& k) { read_value(v, c.task, k); }},
      {"criterion", [&](const json& v, const std::string& k) { read_optional(v, c.criterion, k); }},
      {"verifier", [&](const json& v, const std::string& k) { read_optional(v, c.verifier, k); }},
      {"suite", [&](const json& v, const std::string& k) { read_value(v, c.suite, k); }},
      {"params",
       [&](const json& v, const std::string& k) {
         require(v.is_object(), "config key 'params' must be an object");
         const std::map<std::string, double*> fields{{"alpha", &c.params.alpha},
                                                     {"beta", &c.params.beta},
                                                     {"lambda", &c.params.lambda},
                                                     {"mu", &c.params.mu},
                                                     {"gamma", &c.params.gamma}};
         for (const auto& [name, value] : v.items()) {
           const auto it = fields.find(name);
           require(it != fields.end(), "unknown config key '" + k + "." + name + "'");
           read_value(value, *it->second, k + "." + name);
         }
       }},
      {"b", [&](const json& v, const std::string& k) { read_optional(v, c.b, k); }},
      {"c", [&](const json& v, const std::string& k) { read_optional(v, c.c, k); }},
      {"delta", [&](const json& v, const std::string& k) { read_optional(v, c.delta, k); }},
      {"n", [&](const json& v, const std::string& k) { read_optional(v, c.n, k); }},
      {"input_file", [&](const json& v, const std::string& k) { read_optional(v, c.input_file, k); }},
      {"coefficients",
       [&](const json& v, const std::string& k) {
         if (v.is_array()) {
           c.coefficients = v.dump();
         } else {
           read_optional(v, c.coefficients, k);
         }
       }},
      {"generator", [&](const json& v, const std::string& k) { read_optional(v, c.generator, k); }},
      {"truncate", [&](const json& v, const std::string& k) { read_value(v, c.truncate, k); }},
      {"grid",
       [&](const json& v, const std::string& k) {
         require(v.is_object(), "config key 'grid' must be an object");
         for (const auto& [name, value] : v.items()) {
           if (name == "radii") {
             read_value(value, c.grid.radii, k + ".radii");
           } else if (name == "angles") {
             read_value(value, c.grid.angles, k + ".angles");
           } else {
             throw std::invalid_argument("unknown config key '" + k + "." + name + "'");
           }
         }
       }},
      {"tolerance", [&](const json& v, const std::string& k) { read_value(v, c.tolerance, k); }},
      {"reference", [&](const json& v, const std::string& k) { read_value(v, c.reference, k); }},
      {"eta", [&](const json& v, const std::string& k) { read_value(v, c.eta, k); }},
      {"order", [&](const json& v, const std::string& k) { read_value(v, c.order, k); }},
      {"scan_kind", [&](const json& v, const std::string& k) { read_value(v, c.scan_kind, k); }},
      {"b0", [&](const json& v, const std::string& k) { read_value(v, c.b0, k); }},
      {"theta_count", [&](const json& v, const std::string& k) { read_optional(v, c.theta_count, k); }},
      {"functional", [&](const json& v, const std::string& k) { read_value(v, c.functional, k); }},
      {"radius", [&](const json& v, const std::string& k) { read_value(v, c.radius, k); }},
      {"curve_angles", [&](const json& v, const std::string& k) { read_value(v, c.curve_angles, k); }},
      {"format", [&](const json& v, const std::string& k) { read_value(v, c.format, k); }},
      {"seed", [&](const json& v, const std::string& k) { read_value(v, c.seed, k); }},
      {"proof_ranges", [&](const json& v, const std::string& k) { read_value(v, c.proof_ranges, k); }},
      {"cross_verify", [&](const json& v, const std::string& k) { read_value(v, c.cross_verify, k); }},
      {"timestamp", [&](const json& v, const std::string& k) { read_value(v, c.timestamp, k); }},
      {"out", [&](const json& v, const std::string& k) { read_optional(v, c.out, k); }},
  };
  for (const auto& [key, value] : j.items()) {
    const auto it = setters.find(key);
    require(it != setters.end(), "unknown config key '" + key + "'");
    it->second(value, key);
  }
}

json summary_json(const RunSummary& s) {
  json j{{"schema", 1}, {"task", s.config.task}, {"config", s.config}, {"result", s.result}};
  if (s.consistency) j["consistency"] = consistency_name(*s.consistency);
  if (s.config.task == "reproduce") j["passed"] = s.passed;
  if (s.config.timestamp) {
    j["timestamp"] = iso_timestamp();
    j["wall_time_s"] = s.wall_time_s;
  }
  return j;
}

CoefficientSequence generate_sequence(std::string_view name, std::size_t n, const ParameterSet& p) {
  require(n >= 1, "generator degree must be positive");
  std::vector<double> a(n);
  const auto fill = [&](auto rule) {
    for (std::size_t k = 1; k <= n; ++k) a[k - 1] = rule(static_cast<double>(k));
    return CoefficientSequence(std::move(a));
  };
  if (name == "vietoris") {
    validate_weights(p);
    return fill([&](double k) { return k == 1.0 ? 1.0 : 1.0 / p.weight(k); });
  }
  if (name == "inverse-square") {
    return fill([](double k) { return k == 1.0 ? 1.0 : k == 2.0 ? 0.5 : 1.0 / (k * k); });
  }
  if (name == "inverse-cube") {
    return fill([](double k) { return k == 1.0 ? 1.0 : k == 2.0 ? 0.25 : 1.0 / (k * k * k); });
  }
  if (name == "log-series") return fill([](double k) { return 1.0 / k; });
  try {
    return standard_starlike(name, n);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("unknown generator '" + std::string(name) +
                                "' (vietoris, inverse-square, inverse-cube, log-series, or a catalog name)");
  }
}

CoefficientSequence load_input(const ExperimentConfig& c) {
  if (c.input_file) return read_coefficients(*c.input_file);
  if (c.coefficients) return parse_inline_coefficients(*c.coefficients);
  if (c.generator) return generate_sequence(*c.generator, c.truncate, c.params);
  throw std::invalid_argument("no coefficient source given");
}

RunSummary run_check(const ExperimentConfig& c) {
  RunSummary s{c, 0.0, json::object(), std::nullopt, true, {}, 0};
  const Criterion id = parse_criterion(*c.criterion);
  CriterionInput in;
  in.params = c.params;
  in.options.proof_ranges = c.proof_ranges;
  if (is_cesaro(id)) in.cesaro = cesaro_params(c);
  if (source_count(c) == 1) in.a = load_input(c);

  const auto report = evaluate_criterion(id, in);
  s.result["report"] = report;
  if (const auto* f = report.first_failure()) {
    s.result["first_failure"] = json{{"label", f->label}, {"k", f->k ? json(*f->k) : json(nullptr)}};
  }
  if (c.cross_verify) {
    const auto checks = cross_verify(id, in, c.grid, c.tolerance);
    s.result["verification"] = checks;
    s.consistency = consistency(report, checks);
    if (*s.consistency == Consistency::kInconsistent) s.exit_code = 2;
  }
  return s;
}

RunSummary run_verify(const ExperimentConfig& c) {
  RunSummary s{c, 0.0, json::object(), std::nullopt, true, {}, 0};
  const auto f = load_input(c);
  const double g = c.params.gamma;
  const std::string& v = *c.verifier;
  ClassReport rep;
  if (v == "starlike") {
    rep = verify_starlike(f, g, c.grid, c.tolerance);
  } else if (v == "convex") {
    rep = verify_convex(f, g, c.grid, c.tolerance);
  } else if (v == "close-to-convex") {
    rep = verify_close_to_convex(f, parse_reference(c.reference), c.eta, c.order, c.grid, c.tolerance);
  } else if (v == "typically-real") {
    rep = verify_typically_real(f, c.grid, c.tolerance);
  } else if (v == "prestarlike") {
    rep = verify_prestarlike(f, g, c.grid, c.tolerance);
  } else {
    rep = verify_R_gamma(f, g, c.grid, c.tolerance);
  }
  s.result = rep;
  return s;
}

RunSummary run_scan(const ExperimentConfig& c) {
  RunSummary s{c, 0.0, json::object(), std::nullopt, true, {}, 0};
  TrigCoefficients t;
  if (c.generator && *c.generator == "vietoris") {
    t = vietoris_general_coeffs(c.params, *c.n);
  } else {
    t.b0 = c.b0;
    const auto f = load_input(c);
    t.b.assign(f.values().begin(), f.values().end());
  }
  const ThetaGrid grid = c.theta_count ? ThetaGrid{*c.theta_count} : ThetaGrid::for_degree(t.degree());
  const SumKind kind = c.scan_kind == "cosine" ? SumKind::kCosine : SumKind::kSine;
  const auto res = positivity_scan(t, kind, grid);
  s.result = json{{"kind", c.scan_kind}, {"degree", t.degree()}, {"grid_count", grid.count}, {"scan", res}};
  if (c.format == "csv") {
    std::ostringstream os;
    os << "theta,value\n";
    for (std::size_t j = 1; j <= grid.count; ++j) {
      const double theta = grid.point(j);
      os << format_double(theta) << ',' << format_double(trig_sum(t, kind, theta)) << '\n';
    }
    os << "# " << json(res).dump() << '\n';
    s.csv = os.str();
  }
  return s;
}

RunSummary run_cesaro(const ExperimentConfig& c) {
  RunSummary s{c, 0.0, json::object(), std::nullopt, true, {}, 0};
  const auto cp = cesaro_params(c);
  const auto mean = cesaro_mean(load_input(c), cp);
  s.result = json{{"cesaro", cp}, {"coefficients", mean}};
  if (c.format == "csv") s.csv = coefficients_to_csv(mean);
  return s;
}

RunSummary run_reproduce(const ExperimentConfig& c) {
  RunSummary s{c, 0.0, json::object(), std::nullopt, true, {}, 0};
  ReproduceOptions opts;
  opts.seed = c.seed;
  const auto cases = run_suite(c.suite, opts);
  std::size_t failed = 0;
  for (const auto& r : cases) failed += r.passed ? 0 : 1;
  s.passed = failed == 0;
  s.result = json{{"suite", c.suite}, {"seed", c.seed}, {"cases", cases}, {"failed", failed}};
  if (!s.passed) s.exit_code = 2;
  if (c.format == "csv") {
    std::ostringstream os;
    os << "criterion,case,passed\n";
    for (const auto& r : cases) os << r.criterion << ',' << r.name << ',' << (r.passed ? "true" : "false") << '\n';
    s.csv = os.str();
  }
  return s;
}

std::vector<std::pair<double, std::optional<double>>> emit_boundary_curve(const CoefficientSequence& f,
                                                                          double radius, std::size_t angles,
                                                                          Functional functional) {
  if (!(radius > 0.0 && radius < 1.0)) throw std::invalid_argument("curve radius must lie in (0, 1)");
  std::vector<std::pair<double, std::optional<double>>> rows;
  rows.reserve(angles);
  for (std::size_t j = 0; j < angles; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angles);
    rows.emplace_back(theta, functional_value(functional, f, DiskGrid::point(radius, j, angles)));
  }
  return rows;
}

RunSummary run_curve(const ExperimentConfig& c) {
  RunSummary s{c, 0.0, json::object(), std::nullopt, true, {}, 0};
  const auto rows = emit_boundary_curve(load_input(c), c.radius, c.curve_angles, parse_functional(c.functional));
  json points = json::array();
  std::ostringstream os;
  os << "theta,value\n";
  for (const auto& [theta, value] : rows) {
    points.push_back(json{{"theta", theta}, {"value", optional_json(value)}});
    os << format_double(theta) << ',' << (value ? format_double(*value) : std::string()) << '\n';
  }
  s.result = json{{"functional", c.functional}, {"radius", c.radius}, {"points", std::move(points)}};
  s.csv = os.str();
  return s;
}

RunSummary run_experiment(const ExperimentConfig& c) {
  c.validate();
  const auto start = std::chrono::steady_clock::now();
  RunSummary s;
  if (c.task == "check") {
    s = run_check(c);
  } else if (c.task == "verify") {
    s = run_verify(c);
  } else if (c.task == "scan") {
    s = run_scan(c);
  } else if (c.task == "cesaro") {
    s = run_cesaro(c);
  } else if (c.task == "reproduce") {
    s = run_reproduce(c);
  } else {
    s = run_curve(c);
  }
  s.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

}  // namespace univalent
