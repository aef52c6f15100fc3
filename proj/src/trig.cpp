#include "univalent/trig.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace univalent {

namespace {

bool chain_le(double lhs, double rhs) noexcept { return lhs <= rhs * (1.0 + 1e-12) + 1e-12; }

constexpr double kRefineWidth = 1e-10;

}  // namespace

double ThetaGrid::point(std::size_t j) const noexcept {
  return static_cast<double>(j) * std::numbers::pi / static_cast<double>(count + 1);
}

ThetaGrid ThetaGrid::for_degree(std::size_t n) noexcept {
  return ThetaGrid{std::max<std::size_t>(4096, 8 * n)};
}

TrigCoefficients vietoris_general_coeffs(const ParameterSet& p, std::size_t n) {
  validate_weights(p);
  if (n == 0) throw std::invalid_argument("vietoris_general_coeffs: n must be positive");
  TrigCoefficients t;
  t.b0 = 2.0;
  t.b.resize(n);
  t.b[0] = 1.0;
  for (std::size_t k = 2; k <= n; ++k) t.b[k - 1] = 1.0 / p.weight(static_cast<double>(k));
  return t;
}

CriterionReport check_chain_condition(double a0, std::span<const double> a, const ParameterSet& p) {
  validate_weights(p);
  if (!std::all_of(a.begin(), a.end(), [](double x) { return x > 0.0; }) || !(a0 > 0.0)) {
    throw std::invalid_argument("check_chain_condition: coefficients must be positive");
  }
  CriterionReport r;
  r.criterion = "vietoris-chain";
  r.params = p;
  r.predicted_class = {"positive cosine and sine sums on (0, pi)", std::nullopt, {}};

  auto add = [&](std::string label, long k, double lhs, double rhs) {
    r.conditions.push_back({std::move(label), k, lhs, rhs, chain_le(lhs, rhs), false, true});
  };
  if (!a.empty()) add("a_1 <= a_0/2", 1, a[0], a0 / 2.0);
  if (a.size() >= 2) add("w(2) a_2 <= a_1", 2, p.weight(2.0) * a[1], a[0]);
  for (std::size_t k = 3; k <= a.size(); ++k) {
    const double kd = static_cast<double>(k);
    add("w(k) a_k <= w(k-1) a_{k-1}", static_cast<long>(k), p.weight(kd) * a[k - 1],
        p.weight(kd - 1.0) * a[k - 2]);
  }
  r.finalize();
  return r;
}

double cosine_sum(const TrigCoefficients& t, double theta) noexcept {
  double s = t.b0 / 2.0;
  for (std::size_t k = 1; k <= t.b.size(); ++k) s += t.b[k - 1] * std::cos(static_cast<double>(k) * theta);
  return s;
}

double sine_sum(const TrigCoefficients& t, double theta) noexcept {
  double s = 0.0;
  for (std::size_t k = 1; k <= t.b.size(); ++k) s += t.b[k - 1] * std::sin(static_cast<double>(k) * theta);
  return s;
}

double trig_sum(const TrigCoefficients& t, SumKind kind, double theta) noexcept {
  return kind == SumKind::kCosine ? cosine_sum(t, theta) : sine_sum(t, theta);
}

PositivityResult positivity_scan(const TrigCoefficients& t, SumKind kind, const ThetaGrid& grid) {
  if (grid.count < 8 * std::max<std::size_t>(t.degree(), 1)) {
    throw std::invalid_argument("positivity_scan: grid of " + std::to_string(grid.count) +
                                " points is too coarse for degree " + std::to_string(t.degree()));
  }
  std::size_t best_j = 1;
  double best = trig_sum(t, kind, grid.point(1));
  for (std::size_t j = 2; j <= grid.count; ++j) {
    const double v = trig_sum(t, kind, grid.point(j));
    if (v < best) {
      best = v;
      best_j = j;
    }
  }

  PositivityResult res;
  res.min_value = best;
  res.argmin_theta = grid.point(best_j);

  // The bracket stays inside [theta_1, theta_count]. Near 0 and pi the sums
  // fall below the rounding error of their terms, so refining into the end
  // cells would report noise.
  double lo = grid.point(best_j > 1 ? best_j - 1 : 1);
  double hi = grid.point(best_j < grid.count ? best_j + 1 : grid.count);
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = trig_sum(t, kind, x1);
  double f2 = trig_sum(t, kind, x2);
  while (hi - lo >= kRefineWidth) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = trig_sum(t, kind, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = trig_sum(t, kind, x2);
    }
  }
  const double xm = f1 <= f2 ? x1 : x2;
  const double fm = std::min(f1, f2);
  if (fm < res.min_value) {
    res.min_value = fm;
    res.argmin_theta = xm;
  }
  res.refined = true;
  res.positive = res.min_value > 0.0;
  return res;
}

}  // namespace univalent
