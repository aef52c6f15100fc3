#include "univalent/series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace univalent {

CoefficientSequence::CoefficientSequence(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("coefficient sequence needs at least a_1");
  }
  for (double a : coeffs_) {
    if (!std::isfinite(a)) throw std::invalid_argument("coefficient sequence has a non-finite entry");
  }
}

CoefficientSequence::CoefficientSequence(std::initializer_list<double> coeffs)
    : CoefficientSequence(std::vector<double>(coeffs)) {}

bool CoefficientSequence::is_positive() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double a) { return a > 0.0; });
}

CoefficientSequence CoefficientSequence::truncated(std::size_t n) const {
  n = std::clamp<std::size_t>(n, 1, coeffs_.size());
  return CoefficientSequence(std::vector<double>(coeffs_.begin(), coeffs_.begin() + n));
}

void require_normalized_positive(const CoefficientSequence& f, std::string_view who) {
  if (!f.is_normalized()) {
    throw std::invalid_argument(std::string(who) + ": expected a_1 = 1");
  }
  if (!f.is_positive()) {
    throw std::invalid_argument(std::string(who) + ": expected positive coefficients");
  }
}

double pochhammer(double x, unsigned k) {
  double p = 1.0;
  for (unsigned j = 0; j < k; ++j) {
    p *= x + j;
    if (!std::isfinite(p)) {
      throw std::overflow_error("pochhammer: (x)_k overflows double; use pochhammer_ratio");
    }
  }
  return p;
}

double pochhammer_ratio(double x, double y, unsigned k) {
  double r = 1.0;
  for (unsigned j = 0; j < k; ++j) {
    const double den = y + j;
    if (den == 0.0) throw std::domain_error("pochhammer_ratio: pole, y + j = 0");
    // multiply before dividing so integer-valued ratios stay exact
    r = r * (x + j) / den;
  }
  return r;
}

ComplexPoint evaluate_polynomial(std::span<const double> c, ComplexPoint z) noexcept {
  ComplexPoint acc{0.0, 0.0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ComplexPoint evaluate(const CoefficientSequence& f, ComplexPoint z) noexcept {
  return z * evaluate_polynomial(f.values(), z);
}

std::vector<double> derivative(const CoefficientSequence& f) {
  std::vector<double> d(f.degree());
  for (std::size_t k = 1; k <= f.degree(); ++k) d[k - 1] = static_cast<double>(k) * f[k];
  return d;
}

CoefficientSequence integrate(std::span<const double> derivative_coeffs) {
  std::vector<double> a(derivative_coeffs.size());
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = derivative_coeffs[k] / static_cast<double>(k + 1);
  return CoefficientSequence(std::move(a));
}

CoefficientSequence alexander_transform(const CoefficientSequence& f) {
  return CoefficientSequence(derivative(f));
}

CoefficientSequence hadamard(const CoefficientSequence& f, const CoefficientSequence& g) {
  const std::size_t n = std::min(f.degree(), g.degree());
  std::vector<double> c(n);
  for (std::size_t k = 1; k <= n; ++k) c[k - 1] = f[k] * g[k];
  return CoefficientSequence(std::move(c));
}

CoefficientSequence prestar_kernel(double gamma, std::size_t n) {
  if (!(gamma >= 0.0 && gamma < 1.0)) throw std::domain_error("prestar_kernel: gamma must lie in [0, 1)");
  if (n == 0) throw std::invalid_argument("prestar_kernel: degree must be positive");
  std::vector<double> c(n);
  c[0] = 1.0;
  for (std::size_t k = 1; k < n; ++k) {
    c[k] = c[k - 1] * (static_cast<double>(k) + 1.0 - 2.0 * gamma) / static_cast<double>(k);
  }
  return CoefficientSequence(std::move(c));
}

namespace {

constexpr std::array<StarlikeCatalogEntry, 9> kCatalog{{
    {StarlikeFunction::kIdentity, "z", "identity"},
    {StarlikeFunction::kGeometric, "z/(1-z)", "geometric"},
    {StarlikeFunction::kAlternating, "z/(1+z)", "alternating"},
    {StarlikeFunction::kOddGeometric, "z/(1-z^2)", "odd-geometric"},
    {StarlikeFunction::kOddAlternating, "z/(1+z^2)", "odd-alternating"},
    {StarlikeFunction::kKoebe, "z/(1-z)^2", "koebe"},
    {StarlikeFunction::kRotatedKoebe, "z/(1+z)^2", "rotated-koebe"},
    {StarlikeFunction::kPeriodSix, "z/(1-z+z^2)", "period-six"},
    {StarlikeFunction::kPeriodThree, "z/(1+z+z^2)", "period-three"},
}};

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (ch != ' ' && ch != '\t') out.push_back(ch);
  }
  return out;
}

double sign_of_power(std::size_t e) { return (e % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

std::span<const StarlikeCatalogEntry> starlike_catalog() noexcept { return kCatalog; }

StarlikeFunction parse_starlike(std::string_view name) {
  const std::string key = strip_spaces(name);
  for (const auto& e : kCatalog) {
    if (key == e.name || key == e.slug) return e.id;
  }
  throw std::invalid_argument("unknown starlike function '" + std::string(name) + "'");
}

std::string_view starlike_name(StarlikeFunction id) noexcept {
  for (const auto& e : kCatalog) {
    if (e.id == id) return e.name;
  }
  return "?";
}

double starlike_coefficient(StarlikeFunction id, std::size_t k) noexcept {
  const double kd = static_cast<double>(k);
  switch (id) {
    case StarlikeFunction::kIdentity:
      return k == 1 ? 1.0 : 0.0;
    case StarlikeFunction::kGeometric:
      return 1.0;
    case StarlikeFunction::kAlternating:
      return sign_of_power(k - 1);
    case StarlikeFunction::kOddGeometric:
      return k % 2 == 1 ? 1.0 : 0.0;
    case StarlikeFunction::kOddAlternating:
      return k % 2 == 1 ? sign_of_power((k - 1) / 2) : 0.0;
    case StarlikeFunction::kKoebe:
      return kd;
    case StarlikeFunction::kRotatedKoebe:
      return sign_of_power(k - 1) * kd;
    case StarlikeFunction::kPeriodSix: {
      // z(1+z)/(1+z^3): 1, 1, 0, -1, -1, 0, ...
      constexpr std::array<double, 6> pattern{1.0, 1.0, 0.0, -1.0, -1.0, 0.0};
      return pattern[(k - 1) % 6];
    }
    case StarlikeFunction::kPeriodThree: {
      // z(1-z)/(1-z^3): 1, -1, 0, ...
      constexpr std::array<double, 3> pattern{1.0, -1.0, 0.0};
      return pattern[(k - 1) % 3];
    }
  }
  return 0.0;
}

CoefficientSequence standard_starlike(StarlikeFunction id, std::size_t n) {
  if (n == 0) throw std::invalid_argument("standard_starlike: degree must be positive");
  std::vector<double> c(n);
  for (std::size_t k = 1; k <= n; ++k) c[k - 1] = starlike_coefficient(id, k);
  return CoefficientSequence(std::move(c));
}

CoefficientSequence standard_starlike(std::string_view name, std::size_t n) {
  return standard_starlike(parse_starlike(name), n);
}

}  // namespace univalent
