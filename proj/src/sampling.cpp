#include "univalent/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace univalent {

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

std::size_t Sampler::integer(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
}

bool Sampler::coin(double probability) { return uniform(0.0, 1.0) < probability; }

double Sampler::slack(double tight) {
  if (coin(tight)) return 1.0;
  return 1.0 - uniform(0.0, 1.0);
}

ParameterSet sample_weight_params(Sampler& s) {
  ParameterSet p;
  p.alpha = s.uniform(0.0, 2.0);
  p.beta = s.uniform(0.0, 2.0);
  p.lambda = s.uniform(0.0, 2.0);
  p.mu = s.uniform(std::max(0.0, 1.0 - p.lambda), 2.0);
  return p;
}

ParameterSet sample_cesaro_params(Sampler& s, double max_sum) {
  ParameterSet p;
  const double sum = s.uniform(1.0, max_sum);
  const double t = s.uniform(0.0, 1.0);
  p.lambda = sum * t;
  p.mu = sum - p.lambda;
  p.alpha = s.uniform(0.0, 6.0 / (p.lambda + 4.0));
  p.beta = s.uniform(0.0, 6.0 / (p.mu + 4.0));
  return p;
}

std::vector<double> sample_chain_sequence(Sampler& s, const ParameterSet& p, std::size_t n, double tight) {
  std::vector<double> a(n);
  a[0] = 1.0;
  if (n >= 2) a[1] = s.slack(tight) / p.weight(2.0);
  for (std::size_t k = 2; k < n; ++k) {
    const double kd = static_cast<double>(k);
    a[k] = a[k - 1] * (p.weight(kd) / p.weight(kd + 1.0)) * s.slack(tight);
  }
  return a;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Largest x > 0 with coef * x <= rhs. +inf when every x works, a nonpositive
// value when none does.
double upper_bound(double coef, double rhs) {
  if (coef > 0.0) return rhs / coef;
  return rhs >= 0.0 ? kInf : -1.0;
}

// Draws a_m below every bound in `bounds`; nullopt when they exclude all x > 0.
std::optional<double> draw_below(Sampler& s, std::initializer_list<double> bounds, double fallback,
                                 double tight) {
  double ub = kInf;
  for (double b : bounds) ub = std::min(ub, b);
  if (!(ub > 0.0)) return std::nullopt;
  if (ub == kInf) ub = fallback;
  const double x = ub * s.slack(tight);
  if (!(x > 0.0) || !std::isfinite(x)) return std::nullopt;
  return x;
}

std::size_t draw_degree(Sampler& s, const SamplingOptions& o) {
  if (o.degree) return std::max<std::size_t>(2, *o.degree);
  return s.integer(2, std::max<std::size_t>(2, o.max_degree));
}

CesaroParams sample_bc(Sampler& s, std::size_t n) {
  const double c = s.uniform(0.1, 3.0);
  const double b = c + s.uniform(0.0, 20.0);
  return CesaroParams(b, c, n);
}

std::optional<CriterionInput> finish(Criterion which, CriterionInput in) {
  const auto rep = evaluate_criterion(which, in);
  if (!rep.all_satisfied) {
    const auto* f = rep.first_failure();
    throw std::logic_error("sampler produced an input failing " + std::string(criterion_name(which)) +
                           " at " + (f ? f->label : std::string("?")));
  }
  return in;
}

std::optional<CriterionInput> sample_partial_sum_case(Criterion which, Sampler& s, const SamplingOptions& o) {
  CriterionInput in;
  in.params = sample_weight_params(s);
  const bool ordered = which == Criterion::kStarlike || which == Criterion::kPrestarlike;
  if (ordered) in.params.gamma = s.uniform(0.0, 0.95);
  const double g = in.params.gamma;
  const ParameterSet& p = in.params;
  const std::size_t n = draw_degree(s, o);
  const double t = o.tight_probability;

  std::vector<double> a(n + 1, 0.0);  // 1-based
  a[1] = 1.0;
  for (std::size_t m = 2; m <= n; ++m) {
    const double md = static_cast<double>(m);
    double ub = 0.0;
    switch (which) {
      case Criterion::kStarlike:
        if (m == 2) ub = (1.0 - g) / (2.0 - g);
        else if (m == 3) ub = (2.0 - g) * a[2] / (p.weight(2.0) * (3.0 - g));
        else {
          const double k = md - 2.0;
          const double shrink = std::pow(1.0 + 1.0 / (k + p.alpha), -p.lambda) *
                                std::pow(1.0 + 1.0 / (k + p.beta), -p.mu);
          ub = shrink * (k + 1.0 - g) * a[m - 1] / (k + 2.0 - g);
        }
        break;
      case Criterion::kCloseToConvex:
        if (m == 2) ub = 1.0 / (2.0 * p.weight(2.0));
        else ub = p.weight(md - 1.0) * (md - 1.0) * a[m - 1] / (p.weight(md) * md);
        break;
      case Criterion::kPrestarlike:
      case Criterion::kConvex:
        if (m == 2) ub = 1.0 / (2.0 * (2.0 - g));
        else if (m == 3) ub = 2.0 * (2.0 - g) * a[2] / (p.weight(2.0) * (3.0 - g) * (3.0 - 2.0 * g));
        else {
          const double k = md - 2.0;
          ub = p.weight(k) * (k + 1.0 - g) * (k + 1.0) * a[m - 1] /
               (p.weight(k + 1.0) * (k + 2.0 - g) * (k + 2.0 - 2.0 * g));
        }
        break;
      default:
        throw std::logic_error("not a partial-sum criterion");
    }
    a[m] = ub * s.slack(t);
    if (!(a[m] > 0.0)) return std::nullopt;
  }
  in.a = CoefficientSequence(std::vector<double>(a.begin() + 1, a.end()));
  return finish(which, std::move(in));
}

// Close-to-convex and R(gamma) Cesaro cases share conditions (i)-(iii).
std::optional<CriterionInput> sample_cesaro_chain_case(Criterion which, Sampler& s, const SamplingOptions& o) {
  CriterionInput in;
  in.params = sample_cesaro_params(s);
  const bool r_gamma = which == Criterion::kCesaroRGamma;
  if (r_gamma) in.params.gamma = s.uniform(0.0, 0.9);
  const ParameterSet& p = in.params;
  const std::size_t n = draw_degree(s, o);
  const auto cp = sample_bc(s, n);
  in.cesaro = cp;
  const double b = cp.b(), c = cp.c(), nd = static_cast<double>(n);
  const double al = p.alpha, be = p.beta, la = p.lambda, mu = p.mu;
  const double t = o.tight_probability;

  // (iii) as coef * a_n <= rhs_factor * a_{n-1}
  const double iii_coef = (nd - 2.0 + al) * (nd - 2.0 + be) * c * nd;
  const double iii_rhs = (nd - 2.0 + al - la) * (nd - 2.0 + be - mu) * (1.0 + b - c) * (nd - 1.0);
  auto ii_bound = [&](double k, double ak) {
    return upper_bound((k - 1.0 + al) * (k - 1.0 + be) * (c + nd - k - 1.0) * (k + 1.0),
                       (k - 1.0 + al - la) * (k - 1.0 + be - mu) * (b + nd - k - 1.0) * k * ak);
  };

  std::vector<double> a(n + 1, 0.0);
  a[1] = 1.0;
  const double gate = (1.0 - p.gamma) * (b + nd - 2.0) / (2.0 * (c + nd - 2.0));
  std::optional<double> x =
      draw_below(s, {gate, n == 2 ? upper_bound(iii_coef, iii_rhs * a[1]) : kInf}, gate, t);
  if (!x) return std::nullopt;
  a[2] = *x;
  for (std::size_t m = 3; m <= n; ++m) {
    const double md = static_cast<double>(m);
    if (m == 3) {
      const double i_bound = upper_bound(std::pow(2.0, la + mu + 1.0) * (c + nd - 3.0) * 3.0,
                                         (2.0 - al * la) * (2.0 - be * mu) * (b + nd - 3.0) * a[2]);
      x = draw_below(s, {i_bound, n == 3 ? upper_bound(iii_coef, iii_rhs * a[2]) : kInf}, a[2], t);
    } else if (m == n) {
      x = draw_below(s, {upper_bound(iii_coef, iii_rhs * a[n - 1])}, a[n - 1], t);
    } else if (m == n - 1) {
      // no stated condition links a_{n-2} and a_{n-1}
      const double extra = ii_bound(md - 1.0, a[m - 1]);
      const double base = extra > 0.0 && std::isfinite(extra) ? extra : a[m - 1];
      const double spread = std::log(std::max(o.free_link_spread, 1.0));
      x = base * std::exp(s.uniform(-spread, spread));
    } else {
      x = draw_below(s, {ii_bound(md - 1.0, a[m - 1])}, a[m - 1], t);
    }
    if (!x) return std::nullopt;
    a[m] = *x;
  }
  in.a = CoefficientSequence(std::vector<double>(a.begin() + 1, a.end()));
  return finish(which, std::move(in));
}

std::optional<CriterionInput> sample_cesaro_starlike_case(Sampler& s, const SamplingOptions& o) {
  CriterionInput in;
  in.params = sample_cesaro_params(s, 1.5);
  const ParameterSet& p = in.params;
  const std::size_t n = draw_degree(s, o);
  const auto cp = sample_bc(s, n);
  in.cesaro = cp;
  const double b = cp.b(), c = cp.c(), nd = static_cast<double>(n);
  const double al = p.alpha, be = p.beta, la = p.lambda, mu = p.mu;
  const double sum = la + mu;
  const double t = o.tight_probability;

  const double four_coef = (nd - 2.0 + al) * (nd - 2.0 + be) * (2.0 * nd + 3.0 - 2.0 * sum) * c;
  const double four_rhs = (nd - 2.0 + al - la) * (nd - 2.0 + be - mu) * (2.0 * nd + 1.0 - 2.0 * sum) * (1.0 + b - c);

  std::vector<double> a(n + 1, 0.0);
  a[1] = 1.0;
  const double one = upper_bound((5.0 - 2.0 * sum) * (c + nd - 2.0), (3.0 - 2.0 * sum) * (b + nd - 2.0));
  auto x = draw_below(s, {one, n == 2 ? upper_bound(four_coef, four_rhs) : kInf}, 1.0, t);
  if (!x) return std::nullopt;
  a[2] = *x;
  for (std::size_t m = 3; m <= n; ++m) {
    const double k = static_cast<double>(m) - 1.0;
    if (m == 3) {
      const double two = upper_bound(std::pow(2.0, sum + 2.0) * (7.0 - 2.0 * sum) * (c + nd - 3.0),
                                     (2.0 - al * la) * (2.0 - be * mu) * (5.0 - 2.0 * sum) * (b + nd - 3.0) * a[2]);
      x = draw_below(s, {two, n == 3 ? upper_bound(four_coef, four_rhs * a[2]) : kInf}, a[2], t);
    } else if (m == n) {
      x = draw_below(s, {upper_bound(four_coef, four_rhs * a[n - 1])}, a[n - 1], t);
    } else {
      x = draw_below(s,
                     {upper_bound((2.0 * k + 3.0 - 2.0 * sum) * (k - 1.0 + al) * (k - 1.0 + be) * (c + nd - k - 1.0),
                                  (2.0 * k + 1.0 - 2.0 * sum) * (k - 1.0 + al - la) * (k - 1.0 + be - mu) *
                                      (b + nd - k - 1.0) * a[m - 1])},
                     a[m - 1], t);
    }
    if (!x) return std::nullopt;
    a[m] = *x;
  }
  in.a = CoefficientSequence(std::vector<double>(a.begin() + 1, a.end()));
  return finish(Criterion::kCesaroStarlike, std::move(in));
}

std::optional<CriterionInput> sample_cesaro_odd_case(Sampler& s, const SamplingOptions& o) {
  CriterionInput in;
  in.params = sample_cesaro_params(s);
  const ParameterSet& p = in.params;
  const std::size_t n = draw_degree(s, o);
  const auto cp = sample_bc(s, n);
  in.cesaro = cp;
  const double b = cp.b(), c = cp.c(), nd = static_cast<double>(n);
  const double al = p.alpha, be = p.beta, la = p.lambda, mu = p.mu;
  const double t = o.tight_probability;

  const double three_coef = c * (nd - 1.0 + al) * (nd - 1.0 + be) * nd;
  const double three_rhs = (nd - 1.0 + al - la) * (nd - 1.0 + be - mu) * (1.0 + b - c) * (nd - 1.0);

  std::vector<double> a(n + 1, 0.0);
  a[1] = 1.0;
  const double one = upper_bound((c + nd - 2.0) * std::pow(2.0, la + mu + 3.0),
                                 (2.0 - al * la) * (2.0 - be * mu) * (b + nd - 2.0));
  auto x = draw_below(s, {one, n == 2 ? upper_bound(three_coef, three_rhs) : kInf}, 1.0, t);
  if (!x) return std::nullopt;
  a[2] = *x;
  for (std::size_t m = 3; m <= n; ++m) {
    const double k = static_cast<double>(m) - 1.0;
    if (m == n) {
      x = draw_below(s, {upper_bound(three_coef, three_rhs * a[n - 1])}, a[n - 1], t);
    } else {
      x = draw_below(s,
                     {upper_bound((k + al) * (k + be) * (c + nd - k - 1.0) * (k + 1.0),
                                  k * (k + al - la) * (k + be - mu) * (b + nd - k - 1.0) * a[m - 1])},
                     a[m - 1], t);
    }
    if (!x) return std::nullopt;
    a[m] = *x;
  }
  in.a = CoefficientSequence(std::vector<double>(a.begin() + 1, a.end()));
  return finish(Criterion::kCesaroCloseToConvexOdd, std::move(in));
}

std::optional<CriterionInput> sample_cesaro_prestarlike_case(Sampler& s, const SamplingOptions& o) {
  CriterionInput in;
  in.params = sample_cesaro_params(s);
  in.params.gamma = s.uniform(0.0, 0.95);
  const ParameterSet& p = in.params;
  const double g = p.gamma;
  const std::size_t n = draw_degree(s, o);
  const double nd = static_cast<double>(n);
  const double c = s.uniform(0.1, 3.0);

  // every condition reads lhs <= b + shift (or (1+b-c) * factor): collect the
  // smallest admissible b
  double b_min = c;
  b_min = std::max(b_min, 2.0 * (2.0 - g) * (c + nd - 2.0) - nd + 2.0);
  if (n >= 3) {
    b_min = std::max(b_min, p.weight(2.0) * (3.0 - g) * (3.0 - 2.0 * g) * (c + nd - 3.0) / (2.0 * (2.0 - g)) - nd + 3.0);
  }
  for (std::size_t k = 2; k + 3 <= n; ++k) {
    const double kd = static_cast<double>(k);
    b_min = std::max(b_min, p.weight(kd + 1.0) * (kd + 2.0 - g) * (kd + 2.0 - 2.0 * g) * (c + nd - kd - 2.0) /
                                    (p.weight(kd) * (kd + 1.0 - g) * (kd + 1.0)) -
                                nd + kd + 2.0);
  }
  const double w_prev = p.weight(nd - 2.0);
  if (!(w_prev > 0.0)) return std::nullopt;
  b_min = std::max(b_min, p.weight(nd - 1.0) * (nd - g) * (nd - 2.0 * g) * c /
                              (w_prev * (nd - 1.0 - g) * (nd - 1.0)) -
                          1.0 + c);
  const double stretch = s.coin(o.tight_probability) ? 1.0 : 1.0 + s.uniform(0.0, 1.0);
  in.cesaro = CesaroParams(b_min * stretch, c, n);
  in.a = cesaro_polynomial(*in.cesaro);
  return finish(Criterion::kCesaroPrestarlike, std::move(in));
}

}  // namespace

std::optional<CriterionInput> sample_admissible(Criterion c, Sampler& s, const SamplingOptions& opts) {
  switch (c) {
    case Criterion::kStarlike:
    case Criterion::kCloseToConvex:
    case Criterion::kPrestarlike:
    case Criterion::kConvex:
      return sample_partial_sum_case(c, s, opts);
    case Criterion::kCesaroCloseToConvex:
    case Criterion::kCesaroRGamma:
      return sample_cesaro_chain_case(c, s, opts);
    case Criterion::kCesaroStarlike:
      return sample_cesaro_starlike_case(s, opts);
    case Criterion::kCesaroPrestarlike:
      return sample_cesaro_prestarlike_case(s, opts);
    case Criterion::kCesaroCloseToConvexOdd:
      return sample_cesaro_odd_case(s, opts);
  }
  return std::nullopt;
}

}  // namespace univalent
