#pragma once

// Sampled membership checks for the classical subclasses of normalized
// analytic functions. Each verifier minimizes the defining functional over a
// polar grid inside the unit disk and reports the smallest margin together
// with the point where it occurs. This is numerical evidence, not proof.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "univalent/series.hpp"

namespace univalent {

/// Polar sample grid: every radius in `radii` times `angles` equally spaced
/// angles in [0, 2 pi). Verifiers raise the angle count to 8 N for degree-N
/// inputs, and the report records the count actually used.
struct DiskGrid {
  std::vector<double> radii{0.5, 0.9, 0.99, 0.999};
  std::size_t angles = 2048;

  /// Throws std::invalid_argument unless every radius lies in (0, 1).
  void validate() const;
  [[nodiscard]] std::size_t effective_angles(std::size_t degree) const noexcept;

  /// r e^{2 pi i j / angles}. Points on the axes are exact and the point for
  /// angles - j is the exact conjugate of the point for j.
  [[nodiscard]] static ComplexPoint point(double r, std::size_t j, std::size_t angles) noexcept;
};

struct RadiusMargin {
  double radius = 0.0;
  double margin = 0.0;
  ComplexPoint witness{};
};

struct ClassReport {
  std::string class_name;
  std::optional<double> gamma;
  double margin = 0.0;  // -inf when a denominator vanishes on the grid
  ComplexPoint witness{};
  bool holds = false;
  bool denominator_zero = false;
  DiskGrid grid;
  double tolerance = 1e-9;
  std::vector<RadiusMargin> per_radius;

  [[nodiscard]] const RadiusMargin* at_radius(double r) const noexcept;
};

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kZeroThreshold = 1e-12;

/// Comparison function for close-to-convexity: a catalog entry is evaluated
/// in closed form, an explicit sequence as a polynomial.
using StarlikeReference = std::variant<StarlikeFunction, CoefficientSequence>;

/// Re(z f'/f) - gamma. Zeros of f are disqualifying witnesses.
[[nodiscard]] ClassReport verify_starlike(const CoefficientSequence& f, double gamma,
                                          const DiskGrid& grid = {},
                                          double tolerance = kDefaultTolerance);

/// Re(1 + z f''/f') - gamma. Zeros of f' are disqualifying witnesses.
[[nodiscard]] ClassReport verify_convex(const CoefficientSequence& f, double gamma,
                                        const DiskGrid& grid = {},
                                        double tolerance = kDefaultTolerance);

/// Re e^{i eta}(z f'/g - order), no normalization by 1 - order.
[[nodiscard]] ClassReport verify_close_to_convex(const CoefficientSequence& f,
                                                 const StarlikeReference& g, double eta,
                                                 double order, const DiskGrid& grid = {},
                                                 double tolerance = kDefaultTolerance);

/// Im f(z) sign(Im z) over grid points off the real axis.
[[nodiscard]] ClassReport verify_typically_real(const CoefficientSequence& f,
                                                const DiskGrid& grid = {},
                                                double tolerance = kDefaultTolerance);

/// Starlikeness of order gamma of f * z/(1-z)^{2-2 gamma}.
[[nodiscard]] ClassReport verify_prestarlike(const CoefficientSequence& f, double gamma,
                                             const DiskGrid& grid = {},
                                             double tolerance = kDefaultTolerance);

/// Re f'(z) - gamma.
[[nodiscard]] ClassReport verify_R_gamma(const CoefficientSequence& f, double gamma,
                                         const DiskGrid& grid = {},
                                         double tolerance = kDefaultTolerance);

enum class Functional { kStarlike, kConvex, kRGamma };

/// Pointwise value of z f'/f, 1 + z f''/f' or f' (real part, no threshold).
/// Returns nullopt where the denominator vanishes.
[[nodiscard]] std::optional<double> functional_value(Functional kind, const CoefficientSequence& f,
                                                     ComplexPoint z);

}  // namespace univalent
