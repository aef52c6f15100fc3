#include "univalent/verifiers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace univalent {

void DiskGrid::validate() const {
  if (radii.empty()) throw std::invalid_argument("disk grid needs at least one radius");
  for (double r : radii) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("disk grid radii must lie in (0, 1)");
  }
  if (angles == 0) throw std::invalid_argument("disk grid needs at least one angle");
}

std::size_t DiskGrid::effective_angles(std::size_t degree) const noexcept {
  return std::max(angles, 8 * degree);
}

ComplexPoint DiskGrid::point(double r, std::size_t j, std::size_t angles) noexcept {
  if (j == 0) return {r, 0.0};
  if (2 * j == angles) return {-r, 0.0};
  if (4 * j == angles) return {0.0, r};
  if (4 * j == 3 * angles) return {0.0, -r};
  if (2 * j > angles) return std::conj(point(r, angles - j, angles));
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angles);
  return {r * std::cos(theta), r * std::sin(theta)};
}

const RadiusMargin* ClassReport::at_radius(double r) const noexcept {
  for (const auto& m : per_radius) {
    if (m.radius == r) return &m;
  }
  return nullptr;
}

namespace {

// Value of a class functional at one point; nullopt marks a vanishing denominator.
// `skip` marks points that do not enter the minimum at all.
struct Sample {
  std::optional<double> value;
  bool skip = false;
};

template <class Functional>
ClassReport scan_disk(std::string class_name, std::optional<double> gamma, std::size_t degree,
                      const DiskGrid& grid, double tolerance, Functional&& functional) {
  grid.validate();
  ClassReport rep;
  rep.class_name = std::move(class_name);
  rep.gamma = gamma;
  rep.tolerance = tolerance;
  rep.grid = grid;
  rep.grid.angles = grid.effective_angles(degree);
  std::sort(rep.grid.radii.begin(), rep.grid.radii.end());

  constexpr double kInf = std::numeric_limits<double>::infinity();
  rep.margin = kInf;
  std::optional<ComplexPoint> zero_at;

  for (double r : rep.grid.radii) {
    RadiusMargin rm{r, kInf, {}};
    for (std::size_t j = 0; j < rep.grid.angles; ++j) {
      const ComplexPoint z = DiskGrid::point(r, j, rep.grid.angles);
      const Sample s = functional(z);
      if (s.skip) continue;
      if (!s.value) {
        if (!zero_at) zero_at = z;
        continue;
      }
      if (*s.value < rm.margin) {
        rm.margin = *s.value;
        rm.witness = z;
      }
    }
    if (rm.margin < rep.margin) {
      rep.margin = rm.margin;
      rep.witness = rm.witness;
    }
    rep.per_radius.push_back(rm);
  }

  if (zero_at) {
    rep.denominator_zero = true;
    rep.margin = -kInf;
    rep.witness = *zero_at;
  }
  rep.holds = rep.margin > -tolerance;
  return rep;
}

// Coefficients of f'' as a 0-based list, from the 0-based list of f'.
std::vector<double> derivative_of(const std::vector<double>& c) {
  std::vector<double> d(c.size() > 1 ? c.size() - 1 : 1, 0.0);
  for (std::size_t j = 1; j < c.size(); ++j) d[j - 1] = static_cast<double>(j) * c[j];
  return d;
}

// g(z)/z for the catalog functions, i.e. 1/denominator.
ComplexPoint catalog_denominator(StarlikeFunction id, ComplexPoint z) noexcept {
  const ComplexPoint one{1.0, 0.0};
  switch (id) {
    case StarlikeFunction::kIdentity: return one;
    case StarlikeFunction::kGeometric: return one - z;
    case StarlikeFunction::kAlternating: return one + z;
    case StarlikeFunction::kOddGeometric: return one - z * z;
    case StarlikeFunction::kOddAlternating: return one + z * z;
    case StarlikeFunction::kKoebe: return (one - z) * (one - z);
    case StarlikeFunction::kRotatedKoebe: return (one + z) * (one + z);
    case StarlikeFunction::kPeriodSix: return one - z + z * z;
    case StarlikeFunction::kPeriodThree: return one + z + z * z;
  }
  return one;
}

}  // namespace

ClassReport verify_starlike(const CoefficientSequence& f, double gamma, const DiskGrid& grid,
                            double tolerance) {
  const auto df = derivative(f);
  // z f'/f = f' / (f/z); f/z has the coefficients of f shifted down, so the
  // removable singularity at the origin never appears.
  return scan_disk("starlike", gamma, f.degree(), grid, tolerance, [&](ComplexPoint z) -> Sample {
    const ComplexPoint quotient = evaluate_polynomial(f.values(), z);
    if (std::abs(z * quotient) < kZeroThreshold) return {};
    return {std::real(evaluate_polynomial(df, z) / quotient) - gamma};
  });
}

ClassReport verify_convex(const CoefficientSequence& f, double gamma, const DiskGrid& grid,
                          double tolerance) {
  const auto d1 = derivative(f);
  const auto d2 = derivative_of(d1);
  return scan_disk("convex", gamma, f.degree(), grid, tolerance, [&](ComplexPoint z) -> Sample {
    const ComplexPoint fp = evaluate_polynomial(d1, z);
    if (std::abs(fp) < kZeroThreshold) return {};
    return {std::real(1.0 + z * evaluate_polynomial(d2, z) / fp) - gamma};
  });
}

ClassReport verify_close_to_convex(const CoefficientSequence& f, const StarlikeReference& g,
                                   double eta, double order, const DiskGrid& grid,
                                   double tolerance) {
  const auto df = derivative(f);
  const ComplexPoint rotation = std::polar(1.0, eta);
  if (const auto* id = std::get_if<StarlikeFunction>(&g)) {
    return scan_disk("close-to-convex wrt " + std::string(starlike_name(*id)), order, f.degree(),
                     grid, tolerance, [&](ComplexPoint z) -> Sample {
                       const ComplexPoint q = evaluate_polynomial(df, z) * catalog_denominator(*id, z);
                       return {std::real(rotation * (q - order))};
                     });
  }
  const auto& gs = std::get<CoefficientSequence>(g);
  const std::size_t degree = std::max(f.degree(), gs.degree());
  return scan_disk("close-to-convex", order, degree, grid, tolerance, [&](ComplexPoint z) -> Sample {
    const ComplexPoint g_over_z = evaluate_polynomial(gs.values(), z);
    if (std::abs(z * g_over_z) < kZeroThreshold) return {};
    return {std::real(rotation * (evaluate_polynomial(df, z) / g_over_z - order))};
  });
}

ClassReport verify_typically_real(const CoefficientSequence& f, const DiskGrid& grid,
                                  double tolerance) {
  return scan_disk("typically real", std::nullopt, f.degree(), grid, tolerance,
                   [&](ComplexPoint z) -> Sample {
                     if (z.imag() == 0.0) return {0.0, true};
                     const double side = z.imag() > 0.0 ? 1.0 : -1.0;
                     return {std::imag(evaluate(f, z)) * side};
                   });
}

ClassReport verify_prestarlike(const CoefficientSequence& f, double gamma, const DiskGrid& grid,
                               double tolerance) {
  auto rep = verify_starlike(hadamard(f, prestar_kernel(gamma, f.degree())), gamma, grid, tolerance);
  rep.class_name = "prestarlike";
  return rep;
}

ClassReport verify_R_gamma(const CoefficientSequence& f, double gamma, const DiskGrid& grid,
                           double tolerance) {
  const auto df = derivative(f);
  return scan_disk("R(gamma)", gamma, f.degree(), grid, tolerance, [&](ComplexPoint z) -> Sample {
    return {std::real(evaluate_polynomial(df, z)) - gamma};
  });
}

std::optional<double> functional_value(Functional kind, const CoefficientSequence& f, ComplexPoint z) {
  const auto d1 = derivative(f);
  switch (kind) {
    case Functional::kStarlike: {
      const ComplexPoint q = evaluate_polynomial(f.values(), z);
      if (std::abs(z * q) < kZeroThreshold) return std::nullopt;
      return std::real(evaluate_polynomial(d1, z) / q);
    }
    case Functional::kConvex: {
      const ComplexPoint fp = evaluate_polynomial(d1, z);
      if (std::abs(fp) < kZeroThreshold) return std::nullopt;
      return std::real(1.0 + z * evaluate_polynomial(derivative_of(d1), z) / fp);
    }
    case Functional::kRGamma:
      return std::real(evaluate_polynomial(d1, z));
  }
  return std::nullopt;
}

}  // namespace univalent
