#pragma once

#include <optional>
#include <string>
#include <vector>

#include "univalent/params.hpp"

namespace univalent {

/// One inequality lhs <= rhs of a coefficient criterion.
struct Condition {
  std::string label;
  std::optional<long> k;  // running index for families of conditions
  double lhs = 0.0;
  double rhs = 0.0;
  bool ok = true;
  bool vacuous = false;  // index range empty for this input
  bool counted = true;   // false: informational only, ignored by all_satisfied
};

struct PredictedClass {
  std::string name;
  std::optional<double> order;
  std::vector<std::string> with_respect_to;
};

/// Outcome of a coefficient criterion: every evaluated condition, in order.
struct CriterionReport {
  std::string criterion;
  ParameterSet params;
  std::vector<Condition> gating;
  std::vector<Condition> conditions;
  bool all_satisfied = false;
  PredictedClass predicted_class;
  std::vector<std::string> notes;

  /// First counted, failed condition (gating first), or nullptr.
  [[nodiscard]] const Condition* first_failure() const noexcept;
  /// Recomputes all_satisfied from gating and counted conditions.
  void finalize() noexcept;
};

/// lhs <= rhs + max(1e-12, 1e-12 |rhs|).
[[nodiscard]] bool tolerant_le(double lhs, double rhs) noexcept;

}  // namespace univalent
