#include "univalent/theorems.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace univalent {

namespace {

struct CriterionInfo {
  Criterion id;
  std::string_view name;
  std::string_view numeric;
};

constexpr std::array<CriterionInfo, 9> kInfo{{
    {Criterion::kStarlike, "starlike", "2.2"},
    {Criterion::kCloseToConvex, "close-to-convex", "2.4"},
    {Criterion::kPrestarlike, "prestarlike", "2.5"},
    {Criterion::kConvex, "convex", "2.7"},
    {Criterion::kCesaroCloseToConvex, "cesaro-ctc", "3.1"},
    {Criterion::kCesaroRGamma, "cesaro-r-gamma", "3.3"},
    {Criterion::kCesaroStarlike, "cesaro-starlike", "3.4"},
    {Criterion::kCesaroPrestarlike, "cesaro-prestarlike", "3.5"},
    {Criterion::kCesaroCloseToConvexOdd, "cesaro-ctc-odd", "3.7"},
}};

const CesaroParams& require_cesaro(const CriterionInput& in, Criterion c) {
  if (!in.cesaro) {
    throw std::invalid_argument(std::string(criterion_name(c)) + " needs Cesaro parameters b, c, n");
  }
  return *in.cesaro;
}

}  // namespace

std::string_view criterion_name(Criterion c) noexcept {
  for (const auto& info : kInfo) {
    if (info.id == c) return info.name;
  }
  return "?";
}

Criterion parse_criterion(std::string_view name) {
  for (const auto& info : kInfo) {
    if (name == info.name || name == info.numeric) return info.id;
  }
  throw std::invalid_argument("unknown criterion '" + std::string(name) + "'");
}

bool is_cesaro(Criterion c) noexcept {
  switch (c) {
    case Criterion::kStarlike:
    case Criterion::kCloseToConvex:
    case Criterion::kPrestarlike:
    case Criterion::kConvex:
      return false;
    default:
      return true;
  }
}

CriterionReport evaluate_criterion(Criterion c, const CriterionInput& in) {
  switch (c) {
    case Criterion::kStarlike: return thm_starlike(in.a, in.params);
    case Criterion::kCloseToConvex: return thm_ctc(in.a, in.params);
    case Criterion::kPrestarlike: return thm_prestarlike(in.a, in.params);
    case Criterion::kConvex: return cor_convex(in.a, in.params);
    case Criterion::kCesaroCloseToConvex:
      return cesaro_ctc(in.a, require_cesaro(in, c), in.params, in.options);
    case Criterion::kCesaroRGamma:
      return cesaro_r_gamma(in.a, require_cesaro(in, c), in.params, in.options);
    case Criterion::kCesaroStarlike:
      return cesaro_starlike_half(in.a, require_cesaro(in, c), in.params, in.options);
    case Criterion::kCesaroPrestarlike:
      return cesaro_prestarlike(require_cesaro(in, c), in.params, in.options);
    case Criterion::kCesaroCloseToConvexOdd:
      return cesaro_ctc_odd(in.a, require_cesaro(in, c), in.params, in.options);
  }
  throw std::logic_error("unhandled criterion");
}

CoefficientSequence criterion_target(Criterion c, const CriterionInput& in) {
  if (!is_cesaro(c)) return in.a;
  const auto& cp = require_cesaro(in, c);
  if (c == Criterion::kCesaroPrestarlike) return cesaro_polynomial(cp);
  return cesaro_mean(in.a, cp);
}

std::vector<ClassReport> cross_verify(Criterion c, const CriterionInput& in, const DiskGrid& grid,
                                      double tolerance) {
  const auto f = criterion_target(c, in);
  const double g = in.params.gamma;
  switch (c) {
    case Criterion::kStarlike:
      return {verify_starlike(f, g, grid, tolerance)};
    case Criterion::kCloseToConvex:
    case Criterion::kCesaroCloseToConvexOdd:
      return {verify_close_to_convex(f, StarlikeFunction::kOddGeometric, 0.0, 0.0, grid, tolerance)};
    case Criterion::kPrestarlike:
    case Criterion::kCesaroPrestarlike:
      return {verify_prestarlike(f, g, grid, tolerance)};
    case Criterion::kConvex:
      return {verify_convex(f, 0.0, grid, tolerance)};
    case Criterion::kCesaroCloseToConvex:
      return {verify_close_to_convex(f, StarlikeFunction::kIdentity, 0.0, 0.0, grid, tolerance),
              verify_close_to_convex(f, StarlikeFunction::kGeometric, 0.0, 0.0, grid, tolerance)};
    case Criterion::kCesaroRGamma:
      return {verify_R_gamma(f, g, grid, tolerance)};
    case Criterion::kCesaroStarlike:
      return {verify_starlike(f, in.params.lambda + in.params.mu - 0.5, grid, tolerance)};
  }
  throw std::logic_error("unhandled criterion");
}

Consistency consistency(const CriterionReport& report, const std::vector<ClassReport>& checks) noexcept {
  if (!report.all_satisfied) return Consistency::kNotApplicable;
  const bool all_hold = std::all_of(checks.begin(), checks.end(), [](const auto& r) { return r.holds; });
  return all_hold ? Consistency::kConsistent : Consistency::kInconsistent;
}

std::string_view consistency_name(Consistency c) noexcept {
  switch (c) {
    case Consistency::kConsistent: return "theorem-consistent";
    case Consistency::kInconsistent: return "inconsistent";
    case Consistency::kNotApplicable: return "n/a";
  }
  return "n/a";
}

}  // namespace univalent
