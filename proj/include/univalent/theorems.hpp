#pragma once

// Uniform access to the coefficient criteria: name lookup, evaluation, the
// function each conclusion is about, and cross-checking that conclusion with
// the disk verifiers.

#include <optional>
#include <string_view>
#include <vector>

#include "univalent/cesaro.hpp"
#include "univalent/criteria.hpp"
#include "univalent/verifiers.hpp"

namespace univalent {

enum class Criterion {
  kStarlike,
  kCloseToConvex,
  kPrestarlike,
  kConvex,
  kCesaroCloseToConvex,
  kCesaroRGamma,
  kCesaroStarlike,
  kCesaroPrestarlike,
  kCesaroCloseToConvexOdd,
};

inline constexpr Criterion kAllCriteria[] = {
    Criterion::kStarlike,           Criterion::kCloseToConvex,  Criterion::kPrestarlike,
    Criterion::kConvex,             Criterion::kCesaroCloseToConvex, Criterion::kCesaroRGamma,
    Criterion::kCesaroStarlike,     Criterion::kCesaroPrestarlike,   Criterion::kCesaroCloseToConvexOdd,
};

[[nodiscard]] std::string_view criterion_name(Criterion c) noexcept;

/// Accepts the names above ("starlike", "cesaro-ctc", ...) and the numeric
/// ids used by the CLI (e.g. "2.2", "3.1"). Throws std::invalid_argument.
[[nodiscard]] Criterion parse_criterion(std::string_view name);

[[nodiscard]] bool is_cesaro(Criterion c) noexcept;

struct CriterionInput {
  CoefficientSequence a{1.0};
  ParameterSet params;
  std::optional<CesaroParams> cesaro;
  CesaroOptions options;
};

[[nodiscard]] CriterionReport evaluate_criterion(Criterion c, const CriterionInput& in);

/// The function the criterion's conclusion is about: the input itself, its
/// Cesaro mean, or (prestarlike Cesaro case) the Cesaro polynomial s_n(z).
[[nodiscard]] CoefficientSequence criterion_target(Criterion c, const CriterionInput& in);

/// Runs every verifier that corresponds to the criterion's conclusion on
/// criterion_target().
[[nodiscard]] std::vector<ClassReport> cross_verify(Criterion c, const CriterionInput& in,
                                                    const DiskGrid& grid,
                                                    double tolerance = kDefaultTolerance);

enum class Consistency { kConsistent, kInconsistent, kNotApplicable };

/// kInconsistent only when the criterion is satisfied and some verifier fails;
/// kNotApplicable when the criterion is not satisfied.
[[nodiscard]] Consistency consistency(const CriterionReport& report,
                                      const std::vector<ClassReport>& checks) noexcept;
[[nodiscard]] std::string_view consistency_name(Consistency c) noexcept;

}  // namespace univalent
