#pragma once

// Generalized Cesaro means of type (b-1, c):
//
//   s_n(z, f) = z + sum_{k=2}^{n} (B_{n-k} / B_{n-1}) a_k z^k,
//   B_0 = 1,  B_k = ((1+b-c)/b) (b)_k / (c)_k.
//
// b = 1 + delta, c = 1 gives the classical Cesaro mean of order delta.

#include <cstddef>
#include <vector>

#include "univalent/series.hpp"

namespace univalent {

/// Definition domain b + 1 > c > 0, n >= 2. The coefficient criteria further
/// require b >= c; that is checked there, not here.
class CesaroParams {
 public:
  CesaroParams(double b, double c, std::size_t n);

  /// b = 1 + delta, c = 1. Throws std::domain_error for delta <= -1.
  [[nodiscard]] static CesaroParams classical(double delta, std::size_t n);

  [[nodiscard]] double b() const noexcept { return b_; }
  [[nodiscard]] double c() const noexcept { return c_; }
  [[nodiscard]] std::size_t n() const noexcept { return n_; }

 private:
  double b_;
  double c_;
  std::size_t n_;
};

/// B_0..B_{n-1}. Throws std::domain_error if b <= 0.
[[nodiscard]] std::vector<double> weights(const CesaroParams& cp);

/// B_{n-k}/B_{n-1} for k = 1..n (entry k-1), each a product of factors
/// (c+j)/(b+j) over the index window, with c/(1+b-c) for the B_0/B_1 step.
[[nodiscard]] std::vector<double> weight_ratios(const CesaroParams& cp);

/// Applies the mean to the first n coefficients of f.
/// Throws std::length_error if f has fewer than n coefficients.
[[nodiscard]] CoefficientSequence cesaro_mean(const CoefficientSequence& f, const CesaroParams& cp);

/// The Cesaro polynomial s_n(z) itself: cesaro_mean of z/(1-z).
[[nodiscard]] CoefficientSequence cesaro_polynomial(const CesaroParams& cp);

/// cesaro_mean with b = 1 + delta, c = 1.
[[nodiscard]] CoefficientSequence classical_cesaro(const CoefficientSequence& f, double delta,
                                                   std::size_t n);

/// Same mean from the factorial form
/// ((1+delta)_{n-k}/(n-k)!) ((n-1)!/(1+delta)_{n-1}), evaluated in extended
/// precision. Kept as an independent route for cross-checks.
[[nodiscard]] CoefficientSequence classical_cesaro_factorial(const CoefficientSequence& f,
                                                             double delta, std::size_t n);

}  // namespace univalent
