#include "univalent/cesaro.hpp"

#include <stdexcept>
#include <string>

namespace univalent {

CesaroParams::CesaroParams(double b, double c, std::size_t n) : b_(b), c_(c), n_(n) {
  if (!(c > 0.0)) throw std::domain_error("Cesaro mean needs c > 0");
  if (!(b + 1.0 > c)) throw std::domain_error("Cesaro mean needs b + 1 > c");
  if (n < 2) throw std::domain_error("Cesaro mean needs n >= 2");
}

CesaroParams CesaroParams::classical(double delta, std::size_t n) {
  if (!(delta > -1.0)) throw std::domain_error("classical Cesaro mean needs delta > -1");
  return CesaroParams(1.0 + delta, 1.0, n);
}

std::vector<double> weights(const CesaroParams& cp) {
  const double b = cp.b();
  const double c = cp.c();
  if (!(b > 0.0)) throw std::domain_error("Cesaro weights need b > 0");
  std::vector<double> w(cp.n());
  w[0] = 1.0;
  const double lead = (1.0 + b - c) / b;
  for (std::size_t k = 1; k < w.size(); ++k) {
    w[k] = lead * pochhammer_ratio(b, c, static_cast<unsigned>(k));
  }
  return w;
}

std::vector<double> weight_ratios(const CesaroParams& cp) {
  const double b = cp.b();
  const double c = cp.c();
  const std::size_t n = cp.n();
  if (!(b > 0.0)) throw std::domain_error("Cesaro weights need b > 0");
  std::vector<double> r(n);
  r[0] = 1.0;
  // r_{k+1} = r_k B_{n-k-1}/B_{n-k}; B_j/B_{j+1} = (c+j)/(b+j) for j >= 1.
  for (std::size_t k = 1; k < n; ++k) {
    const std::size_t j = n - k - 1;
    if (j >= 1) {
      r[k] = r[k - 1] * (c + static_cast<double>(j)) / (b + static_cast<double>(j));
    } else {
      r[k] = r[k - 1] * c / (1.0 + b - c);
    }
  }
  return r;
}

CoefficientSequence cesaro_mean(const CoefficientSequence& f, const CesaroParams& cp) {
  const std::size_t n = cp.n();
  if (f.degree() < n) {
    throw std::length_error("cesaro_mean: need " + std::to_string(n) + " coefficients, got " +
                            std::to_string(f.degree()));
  }
  const auto r = weight_ratios(cp);
  std::vector<double> out(n);
  out[0] = f[1];
  for (std::size_t k = 2; k <= n; ++k) out[k - 1] = r[k - 1] * f[k];
  return CoefficientSequence(std::move(out));
}

CoefficientSequence cesaro_polynomial(const CesaroParams& cp) {
  return cesaro_mean(standard_starlike(StarlikeFunction::kGeometric, cp.n()), cp);
}

CoefficientSequence classical_cesaro(const CoefficientSequence& f, double delta, std::size_t n) {
  return cesaro_mean(f, CesaroParams::classical(delta, n));
}

CoefficientSequence classical_cesaro_factorial(const CoefficientSequence& f, double delta,
                                               std::size_t n) {
  if (!(delta > -1.0)) throw std::domain_error("classical Cesaro mean needs delta > -1");
  if (n < 2) throw std::domain_error("Cesaro mean needs n >= 2");
  if (f.degree() < n) throw std::length_error("classical_cesaro_factorial: sequence too short");
  // q[m] = (1+delta)_m / m!
  std::vector<long double> q(n);
  q[0] = 1.0L;
  for (std::size_t m = 1; m < n; ++m) {
    q[m] = q[m - 1] * (static_cast<long double>(delta) + static_cast<long double>(m)) /
           static_cast<long double>(m);
  }
  std::vector<double> out(n);
  out[0] = f[1];
  for (std::size_t k = 2; k <= n; ++k) {
    out[k - 1] = static_cast<double>(q[n - k] / q[n - 1] * static_cast<long double>(f[k]));
  }
  return CoefficientSequence(std::move(out));
}

}  // namespace univalent
