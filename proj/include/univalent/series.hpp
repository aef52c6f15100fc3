#pragma once

// Truncated power series f(z) = a_1 z + a_2 z^2 + ... + a_N z^N on the unit disk.

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace univalent {

using ComplexPoint = std::complex<double>;

/// Taylor coefficients a_1..a_N of an analytic function vanishing at the origin.
///
/// Storage is dense and starts at k = 1; there is never a constant term. The
/// class only requires N >= 1 and finite entries. Normalization (a_1 == 1) and
/// positivity are checked by the consumers that need them, since derived series
/// (linear combinations, alternating catalog entries) legitimately violate them.
class CoefficientSequence {
 public:
  explicit CoefficientSequence(std::vector<double> coeffs);
  CoefficientSequence(std::initializer_list<double> coeffs);

  /// Coefficient a_k, 1-based. Returns 0 for k > degree().
  [[nodiscard]] double operator[](std::size_t k) const noexcept {
    return (k >= 1 && k <= coeffs_.size()) ? coeffs_[k - 1] : 0.0;
  }
  [[nodiscard]] std::size_t degree() const noexcept { return coeffs_.size(); }
  [[nodiscard]] std::span<const double> values() const noexcept { return coeffs_; }

  [[nodiscard]] bool is_normalized() const noexcept { return coeffs_.front() == 1.0; }
  [[nodiscard]] bool is_positive() const noexcept;

  /// First n coefficients (n clamped to degree()).
  [[nodiscard]] CoefficientSequence truncated(std::size_t n) const;

  bool operator==(const CoefficientSequence&) const = default;

 private:
  std::vector<double> coeffs_;
};

/// Throws std::invalid_argument unless a_1 == 1 and every a_k > 0.
void require_normalized_positive(const CoefficientSequence& f, std::string_view who);

// Pochhammer symbols

/// (x)_k = x(x+1)...(x+k-1), (x)_0 = 1, by forward recurrence.
/// Throws std::overflow_error when the product leaves the double range.
[[nodiscard]] double pochhammer(double x, unsigned k);

/// (x)_k / (y)_k accumulated one factor (x+j)/(y+j) at a time.
/// Throws std::domain_error if some y + j == 0.
[[nodiscard]] double pochhammer_ratio(double x, double y, unsigned k);

// Evaluation

/// Horner evaluation of c_0 + c_1 z + ... for a 0-based coefficient list.
[[nodiscard]] ComplexPoint evaluate_polynomial(std::span<const double> c, ComplexPoint z) noexcept;

/// f(z) = sum a_k z^k.
[[nodiscard]] ComplexPoint evaluate(const CoefficientSequence& f, ComplexPoint z) noexcept;

/// Coefficients of f'(z) as a 0-based list: entry k is (k+1) a_{k+1}, k = 0..N-1.
[[nodiscard]] std::vector<double> derivative(const CoefficientSequence& f);

/// Coefficientwise inverse of derivative(): a_{k+1} = c_k / (k+1).
[[nodiscard]] CoefficientSequence integrate(std::span<const double> derivative_coeffs);

/// Coefficients of z f'(z), i.e. k a_k (the Alexander transform read coefficientwise).
[[nodiscard]] CoefficientSequence alexander_transform(const CoefficientSequence& f);

/// Coefficientwise product; the result has degree min(N_f, N_g).
[[nodiscard]] CoefficientSequence hadamard(const CoefficientSequence& f, const CoefficientSequence& g);

/// Coefficients of k_gamma(z) = z/(1-z)^{2-2 gamma}: (2-2gamma)_{k-1}/(k-1)!, k = 1..N.
[[nodiscard]] CoefficientSequence prestar_kernel(double gamma, std::size_t n);

// The nine starlike functions with integer coefficients.

enum class StarlikeFunction {
  kIdentity,          // z
  kGeometric,         // z/(1-z)
  kAlternating,       // z/(1+z)
  kOddGeometric,      // z/(1-z^2)
  kOddAlternating,    // z/(1+z^2)
  kKoebe,             // z/(1-z)^2
  kRotatedKoebe,      // z/(1+z)^2
  kPeriodSix,         // z/(1-z+z^2)
  kPeriodThree,       // z/(1+z+z^2)
};

struct StarlikeCatalogEntry {
  StarlikeFunction id;
  std::string_view name;  // e.g. "z/(1-z^2)"
  std::string_view slug;  // e.g. "odd-geometric"
};

[[nodiscard]] std::span<const StarlikeCatalogEntry> starlike_catalog() noexcept;

/// Looks up by display name (whitespace-insensitive) or slug.
/// Throws std::invalid_argument for unknown names.
[[nodiscard]] StarlikeFunction parse_starlike(std::string_view name);
[[nodiscard]] std::string_view starlike_name(StarlikeFunction id) noexcept;

/// Exact integer coefficient of z^k (k >= 1).
[[nodiscard]] double starlike_coefficient(StarlikeFunction id, std::size_t k) noexcept;

[[nodiscard]] CoefficientSequence standard_starlike(StarlikeFunction id, std::size_t n);
[[nodiscard]] CoefficientSequence standard_starlike(std::string_view name, std::size_t n);

}  // namespace univalent
