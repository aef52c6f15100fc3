#pragma once

// Cosine and sine partial sums b_0/2 + sum b_k cos(k theta), sum b_k sin(k theta)
// on the open interval (0, pi): Vietoris-type coefficient generation, the
// monotone weighted chain predicate, and numerical positivity scans.
//
// Scans are sampled evidence. A positive minimum over a grid is not a proof,
// and the sine sum always tends to 0 at both endpoints, so no uniform lower
// bound is ever claimed.

#include <cstddef>
#include <span>
#include <vector>

#include "univalent/params.hpp"
#include "univalent/report.hpp"

namespace univalent {

struct TrigCoefficients {
  double b0 = 2.0;
  std::vector<double> b;  // b_1..b_n

  [[nodiscard]] std::size_t degree() const noexcept { return b.size(); }
};

enum class SumKind { kCosine, kSine };

/// theta_j = j pi / (count + 1), j = 1..count; both endpoints excluded.
struct ThetaGrid {
  std::size_t count = 4096;

  [[nodiscard]] double point(std::size_t j) const noexcept;

  /// max(4096, 8 n).
  [[nodiscard]] static ThetaGrid for_degree(std::size_t n) noexcept;
};

struct PositivityResult {
  double min_value = 0.0;
  double argmin_theta = 0.0;
  bool refined = false;
  bool positive = false;
};

/// b_0 = 2, b_1 = 1, b_k = 1/((k+alpha)^lambda (k+beta)^mu) for 2 <= k <= n.
/// Throws std::domain_error outside alpha, beta, lambda, mu >= 0, lambda+mu >= 1.
[[nodiscard]] TrigCoefficients vietoris_general_coeffs(const ParameterSet& p, std::size_t n);

/// Checks w(k+1) a_{k+1} <= w(k) a_k <= ... <= w(2) a_2 <= a_1 <= a_0/2 link by
/// link. Link k compares the term carrying a_k with its left neighbour; link 1
/// is a_1 <= a_0/2. A link L <= R passes when L <= R(1+1e-12) + 1e-12.
/// Throws std::invalid_argument unless every a_k > 0.
[[nodiscard]] CriterionReport check_chain_condition(double a0, std::span<const double> a,
                                                    const ParameterSet& p);

[[nodiscard]] double cosine_sum(const TrigCoefficients& t, double theta) noexcept;
[[nodiscard]] double sine_sum(const TrigCoefficients& t, double theta) noexcept;
[[nodiscard]] double trig_sum(const TrigCoefficients& t, SumKind kind, double theta) noexcept;

/// Coarse scan over `grid`, then golden-section refinement on the two cells
/// around the smallest sample until the bracket is narrower than 1e-10. The
/// refinement never leaves [theta_1, theta_count], so the result is the minimum
/// over the span of the grid. Ties go to the smaller theta. Throws std::invalid_argument when
/// grid.count < 8 n.
[[nodiscard]] PositivityResult positivity_scan(const TrigCoefficients& t, SumKind kind,
                                               const ThetaGrid& grid);

}  // namespace univalent
