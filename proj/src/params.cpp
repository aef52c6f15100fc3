#include "univalent/params.hpp"

#include <stdexcept>
#include <string>

#include "univalent/report.hpp"

namespace univalent {

void validate_weights(const ParameterSet& p) {
  if (!(p.alpha >= 0.0 && p.beta >= 0.0 && p.lambda >= 0.0 && p.mu >= 0.0)) {
    throw std::domain_error("alpha, beta, lambda, mu must be nonnegative");
  }
  if (!(p.lambda + p.mu >= 1.0)) throw std::domain_error("lambda + mu must be at least 1");
}

void validate_with_order(const ParameterSet& p) {
  validate_weights(p);
  if (!(p.gamma >= 0.0 && p.gamma < 1.0)) throw std::domain_error("gamma must lie in [0, 1)");
}

void validate_cesaro_ranges(const ParameterSet& p, bool proof_ranges) {
  validate_weights(p);
  if (!(p.lambda + p.mu < 2.0)) throw std::domain_error("lambda + mu must be below 2");
  const double shift = proof_ranges ? 2.0 : 4.0;
  if (p.alpha > 6.0 / (p.lambda + shift)) {
    throw std::domain_error("alpha exceeds 6/(lambda+" + std::to_string(static_cast<int>(shift)) + ")");
  }
  if (p.beta > 6.0 / (p.mu + shift)) {
    throw std::domain_error("beta exceeds 6/(mu+" + std::to_string(static_cast<int>(shift)) + ")");
  }
}

bool tolerant_le(double lhs, double rhs) noexcept {
  const double slack = std::max(1e-12, 1e-12 * std::abs(rhs));
  return lhs <= rhs + slack;
}

const Condition* CriterionReport::first_failure() const noexcept {
  for (const auto* list : {&gating, &conditions}) {
    for (const auto& c : *list) {
      if (c.counted && !c.vacuous && !c.ok) return &c;
    }
  }
  return nullptr;
}

void CriterionReport::finalize() noexcept { all_satisfied = first_failure() == nullptr; }

}  // namespace univalent
