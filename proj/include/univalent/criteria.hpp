#pragma once

// Coefficient conditions that certify class membership of partial sums
// f_n(z) = z + a_2 z^2 + ... + a_n z^n and of generalized Cesaro means.
//
// Every predicate evaluates each inequality literally, in the order stated,
// and records both sides. Comparisons accept lhs <= rhs + max(1e-12, 1e-12|rhs|)
// because the extremal examples satisfy the conditions with equality.
// Conditions whose index range is empty for the given input are recorded as
// vacuous. Parameter-range violations are hypotheses, not conditions, and
// throw std::domain_error.

#include <string_view>

#include "univalent/cesaro.hpp"
#include "univalent/params.hpp"
#include "univalent/report.hpp"
#include "univalent/series.hpp"

namespace univalent {

/// Starlike of order p.gamma:
///  (1) (2-g) a_2 <= (1-g) a_1
///  (2) (3-g) a_3 <= (2-g) a_2 / w(2)
///  (3) (k+2-g) a_{k+2} <= (1+1/(k+a))^-l (1+1/(k+b))^-m (k+1-g) a_{k+1}, k >= 2
[[nodiscard]] CriterionReport thm_starlike(const CoefficientSequence& a, const ParameterSet& p);

/// Close-to-convex with respect to z/(1-z^2): the chain
/// w(k+1)(k+1)a_{k+1} <= w(k) k a_k <= ... <= w(2) 2 a_2 <= 1.
[[nodiscard]] CriterionReport thm_ctc(const CoefficientSequence& a, const ParameterSet& p);

/// Prestarlike of order p.gamma:
///  (1) w(2)(3-g)(3-2g) a_3 <= 2(2-g) a_2 <= a_1
///  (2) w(k+1)(k+2-g)(k+2-2g) a_{k+2} <= w(k)(k+1-g)(k+1) a_{k+1}, k >= 2
[[nodiscard]] CriterionReport thm_prestarlike(const CoefficientSequence& a, const ParameterSet& p);

/// Convex: w(k+1)(k+2)^2 a_{k+2} <= w(k)(k+1)^2 a_{k+1} <= ... <= w(2) 9 a_3
/// <= 4 a_2 <= a_1. Coincides with thm_prestarlike at gamma = 0.
[[nodiscard]] CriterionReport cor_convex(const CoefficientSequence& a, const ParameterSet& p);

struct CesaroOptions {
  /// Accept alpha <= 6/(lambda+2), beta <= 6/(mu+2) instead of the +4 bounds.
  bool proof_ranges = false;
};

/// Cesaro mean s_n close-to-convex with respect to z and z/(1-z).
/// Gating: (b+n-2) a_1 >= 2(c+n-2) a_2, then (i), (ii) for 3 <= k <= n-3 and
/// (iii). The k = n-2 instance of (ii) is also evaluated and reported as
/// informational ("proof-range extra"); it does not affect all_satisfied.
[[nodiscard]] CriterionReport cesaro_ctc(const CoefficientSequence& a, const CesaroParams& cp,
                                         const ParameterSet& p, CesaroOptions opts = {});

/// Largest order gamma with s_n in R(gamma): 1 - 2 a_2 (c+n-2)/(b+n-2).
[[nodiscard]] double cesaro_r_gamma_bound(const CoefficientSequence& a, const CesaroParams& cp);

/// Predicate form: gamma <= cesaro_r_gamma_bound and conditions (i)-(iii) of
/// cesaro_ctc. The gamma condition replaces the gating hypothesis.
[[nodiscard]] CriterionReport cesaro_r_gamma(const CoefficientSequence& a, const CesaroParams& cp,
                                             const ParameterSet& p, CesaroOptions opts = {});

/// Cesaro mean s_n starlike of order lambda + mu - 1/2, conditions (1)-(4).
/// p.gamma is ignored; the report records the derived order and flags
/// orders >= 1.
[[nodiscard]] CriterionReport cesaro_starlike_half(const CoefficientSequence& a,
                                                   const CesaroParams& cp, const ParameterSet& p,
                                                   CesaroOptions opts = {});

/// The Cesaro polynomial s_n(z) prestarlike of order p.gamma, conditions (1)-(4);
/// depends only on (b, c, n) and the parameters.
[[nodiscard]] CriterionReport cesaro_prestarlike(const CesaroParams& cp, const ParameterSet& p,
                                                 CesaroOptions opts = {});

/// Cesaro mean s_n close-to-convex with respect to z/(1-z^2), conditions (1)-(3).
[[nodiscard]] CriterionReport cesaro_ctc_odd(const CoefficientSequence& a, const CesaroParams& cp,
                                             const ParameterSet& p, CesaroOptions opts = {});

enum class DeltaBoundKind { kCloseToConvex, kPrestarlike };

/// Lower bound on delta (b = 1 + delta, c = 1) from the closed-form maxima:
///  close-to-convex: max{0, (n-2)(2^{l+m+2}/((2-a l)(2-b m)) - 1),
///                          (n-3)(2(l+m)+a m+b l+l m)/((2+a-l)(2+b-m))}
///  prestarlike:     max{(n-1)(3-2g), (n-2)(w(2)(3-g)(3-2g)/(2(2-g)) - 1),
///                          (n-3)(w(3)(4-g)(4-2g)/(w(2)(3-g)3) - 1)}
[[nodiscard]] double example_delta_bound(DeltaBoundKind kind, std::size_t n, const ParameterSet& p);

}  // namespace univalent
