#pragma once

// Configuration, dispatch and JSON summaries for the command-line runner.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "univalent/cesaro.hpp"
#include "univalent/params.hpp"
#include "univalent/series.hpp"
#include "univalent/theorems.hpp"
#include "univalent/trig.hpp"
#include "univalent/verifiers.hpp"

namespace univalent {

struct ExperimentConfig {
  std::string task;  // check | verify | scan | cesaro | reproduce | curve

  std::optional<std::string> criterion;  // check
  std::optional<std::string> verifier;   // verify
  std::string suite = "all";             // reproduce

  ParameterSet params;
  std::optional<double> b;
  std::optional<double> c;
  std::optional<double> delta;  // b = 1 + delta, c = 1
  std::optional<std::size_t> n;

  // Exactly one coefficient source.
  std::optional<std::string> input_file;
  std::optional<std::string> coefficients;  // inline list
  std::optional<std::string> generator;
  std::size_t truncate = 200;

  DiskGrid grid;
  double tolerance = kDefaultTolerance;

  std::string reference = "z";  // close-to-convex comparison function
  double eta = 0.0;
  double order = 0.0;  // close-to-convex order

  std::string scan_kind = "sine";
  double b0 = 2.0;
  std::optional<std::size_t> theta_count;

  std::string functional = "starlike";  // curve
  double radius = 0.999;
  std::size_t curve_angles = 360;

  std::string format = "json";
  std::uint64_t seed = 42;
  bool proof_ranges = false;
  bool cross_verify = false;
  bool timestamp = true;
  std::optional<std::string> out;

  /// Throws std::invalid_argument naming the first bad field.
  void validate() const;
};

void to_json(nlohmann::json& j, const ExperimentConfig& c);
/// Rejects unknown keys and wrongly typed values with std::invalid_argument.
void from_json(const nlohmann::json& j, ExperimentConfig& c);

struct RunSummary {
  ExperimentConfig config;
  double wall_time_s = 0.0;
  nlohmann::json result;
  std::optional<Consistency> consistency;
  bool passed = true;         // reproduce: every case passed
  std::string csv;            // populated when the task has a CSV form
  int exit_code = 0;          // 0 ok, 2 inconsistent or failed reproduction
};

/// {"schema": 1, "task", "config", "result", "consistency"?, "timestamp"?, "wall_time_s"?}.
[[nodiscard]] nlohmann::json summary_json(const RunSummary& s);

/// The generators accepted in ExperimentConfig::generator: vietoris,
/// inverse-square, inverse-cube, log-series and every catalog name or slug.
[[nodiscard]] CoefficientSequence generate_sequence(std::string_view name, std::size_t n,
                                                    const ParameterSet& p);

[[nodiscard]] CoefficientSequence load_input(const ExperimentConfig& c);

[[nodiscard]] RunSummary run_check(const ExperimentConfig& c);
[[nodiscard]] RunSummary run_verify(const ExperimentConfig& c);
[[nodiscard]] RunSummary run_scan(const ExperimentConfig& c);
[[nodiscard]] RunSummary run_cesaro(const ExperimentConfig& c);
[[nodiscard]] RunSummary run_reproduce(const ExperimentConfig& c);
[[nodiscard]] RunSummary run_curve(const ExperimentConfig& c);

/// Dispatches on c.task after validating the config.
[[nodiscard]] RunSummary run_experiment(const ExperimentConfig& c);

/// (theta, value) of the chosen functional along |z| = radius, theta = 2 pi j / angles.
/// The value is empty where the functional's denominator vanishes.
[[nodiscard]] std::vector<std::pair<double, std::optional<double>>> emit_boundary_curve(
    const CoefficientSequence& f, double radius, std::size_t angles, Functional functional);

}  // namespace univalent
