#pragma once

#include <cmath>

namespace univalent {

/// Exponents and shifts of the generalized Vietoris weights
/// w(k) = (k+alpha)^lambda (k+beta)^mu, plus the class order gamma where a
/// criterion uses one.
struct ParameterSet {
  double alpha = 0.0;
  double beta = 0.0;
  double lambda = 1.0;
  double mu = 0.0;
  double gamma = 0.0;

  [[nodiscard]] double weight(double k) const noexcept {
    return std::pow(k + alpha, lambda) * std::pow(k + beta, mu);
  }
  [[nodiscard]] double exponent_sum() const noexcept { return lambda + mu; }
};

/// alpha, beta, lambda, mu >= 0 and lambda + mu >= 1; throws std::domain_error.
void validate_weights(const ParameterSet& p);

/// validate_weights() plus 0 <= gamma < 1.
void validate_with_order(const ParameterSet& p);

/// Ranges shared by the Cesaro-mean criteria: 1 <= lambda+mu < 2,
/// alpha <= 6/(lambda+4), beta <= 6/(mu+4). With `proof_ranges` the looser
/// alpha <= 6/(lambda+2), beta <= 6/(mu+2) is accepted instead.
void validate_cesaro_ranges(const ParameterSet& p, bool proof_ranges);

}  // namespace univalent
