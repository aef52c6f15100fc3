#include "univalent/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace univalent {

namespace {

class ReportBuilder {
 public:
  ReportBuilder(std::string name, const ParameterSet& p) {
    report_.criterion = std::move(name);
    report_.params = p;
  }

  void gate(std::string label, double lhs, double rhs) {
    report_.gating.push_back({std::move(label), std::nullopt, lhs, rhs, tolerant_le(lhs, rhs), false, true});
  }
  void check(std::string label, std::optional<long> k, double lhs, double rhs, bool counted = true) {
    report_.conditions.push_back({std::move(label), k, lhs, rhs, tolerant_le(lhs, rhs), false, counted});
  }
  void vacuous(std::string label, bool counted = true) {
    report_.conditions.push_back({std::move(label), std::nullopt, 0.0, 0.0, true, true, counted});
  }
  void note(std::string text) { report_.notes.push_back(std::move(text)); }

  CriterionReport finish(PredictedClass predicted) {
    report_.predicted_class = std::move(predicted);
    report_.finalize();
    return std::move(report_);
  }

 private:
  CriterionReport report_;
};

double dk(std::size_t k) { return static_cast<double>(k); }
double dk(long k) { return static_cast<double>(k); }

void require_cesaro_input(const CoefficientSequence* a, const CesaroParams& cp, const ParameterSet& p,
                          CesaroOptions opts, std::string_view who) {
  validate_cesaro_ranges(p, opts.proof_ranges);
  if (!(cp.b() >= cp.c())) throw std::domain_error(std::string(who) + ": requires b >= c");
  if (a == nullptr) return;
  require_normalized_positive(*a, who);
  if (a->degree() < cp.n()) {
    throw std::length_error(std::string(who) + ": need a_1..a_n with n = " + std::to_string(cp.n()));
  }
}

// Conditions (i)-(iii) shared by the close-to-convex and R(gamma) criteria.
void add_cesaro_chain(ReportBuilder& rb, const CoefficientSequence& a, const CesaroParams& cp,
                      const ParameterSet& p) {
  const double b = cp.b();
  const double c = cp.c();
  const long n = static_cast<long>(cp.n());
  const double nd = dk(n);
  const double al = p.alpha, be = p.beta, la = p.lambda, mu = p.mu;

  if (n >= 3) {
    rb.check("(i) 2^{l+m+1}(c+n-3) 3a_3 <= (2-al)(2-bm)(b+n-3) a_2", std::nullopt,
             std::pow(2.0, la + mu + 1.0) * (c + nd - 3.0) * 3.0 * a[3],
             (2.0 - al * la) * (2.0 - be * mu) * (b + nd - 3.0) * a[2]);
  } else {
    rb.vacuous("(i) 2^{l+m+1}(c+n-3) 3a_3 <= (2-al)(2-bm)(b+n-3) a_2");
  }

  auto link = [&](long k) {
    const double kd = dk(k);
    const std::size_t ku = static_cast<std::size_t>(k);
    return std::pair{(kd - 1.0 + al) * (kd - 1.0 + be) * (c + nd - kd - 1.0) * (kd + 1.0) * a[ku + 1],
                     (kd - 1.0 + al - la) * (kd - 1.0 + be - mu) * (b + nd - kd - 1.0) * kd * a[ku]};
  };
  const std::string ii = "(ii) (k-1+a)(k-1+b)(c+n-k-1)(k+1)a_{k+1} <= (k-1+a-l)(k-1+b-m)(b+n-k-1) k a_k";
  if (n - 3 < 3) rb.vacuous(ii);
  for (long k = 3; k <= n - 3; ++k) {
    const auto [lhs, rhs] = link(k);
    rb.check(ii, k, lhs, rhs);
  }
  const std::string extra = "(ii) at k = n-2 (proof-range extra)";
  if (n - 2 >= 3) {
    const auto [lhs, rhs] = link(n - 2);
    rb.check(extra, n - 2, lhs, rhs, false);
  } else {
    rb.vacuous(extra, false);
  }

  const std::size_t nu = cp.n();
  rb.check("(iii) (n-2+a)(n-2+b) c n a_n <= (n-2+a-l)(n-2+b-m)(1+b-c)(n-1) a_{n-1}", std::nullopt,
           (nd - 2.0 + al) * (nd - 2.0 + be) * c * nd * a[nu],
           (nd - 2.0 + al - la) * (nd - 2.0 + be - mu) * (1.0 + b - c) * (nd - 1.0) * a[nu - 1]);
}

}  // namespace

CriterionReport thm_starlike(const CoefficientSequence& a, const ParameterSet& p) {
  validate_with_order(p);
  require_normalized_positive(a, "thm_starlike");
  const double g = p.gamma;
  const std::size_t n = a.degree();
  ReportBuilder rb("starlike", p);

  if (n >= 2) {
    rb.check("(1) (2-g) a_2 <= (1-g) a_1", std::nullopt, (2.0 - g) * a[2], (1.0 - g) * a[1]);
  } else {
    rb.vacuous("(1) (2-g) a_2 <= (1-g) a_1");
  }
  if (n >= 3) {
    rb.check("(2) (3-g) a_3 <= (2-g) a_2 / w(2)", std::nullopt, (3.0 - g) * a[3],
             (2.0 - g) * a[2] / p.weight(2.0));
  } else {
    rb.vacuous("(2) (3-g) a_3 <= (2-g) a_2 / w(2)");
  }
  const std::string three = "(3) (k+2-g) a_{k+2} <= (1+1/(k+a))^-l (1+1/(k+b))^-m (k+1-g) a_{k+1}";
  if (n < 4) rb.vacuous(three);
  for (std::size_t k = 2; k + 2 <= n; ++k) {
    const double kd = dk(k);
    const double shrink = std::pow(1.0 + 1.0 / (kd + p.alpha), -p.lambda) *
                          std::pow(1.0 + 1.0 / (kd + p.beta), -p.mu);
    rb.check(three, static_cast<long>(k), (kd + 2.0 - g) * a[k + 2], shrink * (kd + 1.0 - g) * a[k + 1]);
  }
  if (g == 0.0) rb.note("at order 0 the partial sums are also close-to-convex wrt z and z/(1-z)");
  return rb.finish({"starlike", g, {}});
}

CriterionReport thm_ctc(const CoefficientSequence& a, const ParameterSet& p) {
  validate_weights(p);
  require_normalized_positive(a, "thm_ctc");
  const std::size_t n = a.degree();
  ReportBuilder rb("close-to-convex", p);
  if (n >= 2) {
    rb.check("w(2) 2 a_2 <= 1", 2, p.weight(2.0) * 2.0 * a[2], a[1]);
  } else {
    rb.vacuous("w(2) 2 a_2 <= 1");
  }
  for (std::size_t k = 2; k + 1 <= n; ++k) {
    const double kd = dk(k);
    rb.check("w(k+1)(k+1) a_{k+1} <= w(k) k a_k", static_cast<long>(k + 1),
             p.weight(kd + 1.0) * (kd + 1.0) * a[k + 1], p.weight(kd) * kd * a[k]);
  }
  return rb.finish({"close-to-convex", std::nullopt, {"z/(1-z^2)"}});
}

CriterionReport thm_prestarlike(const CoefficientSequence& a, const ParameterSet& p) {
  validate_with_order(p);
  require_normalized_positive(a, "thm_prestarlike");
  const double g = p.gamma;
  const std::size_t n = a.degree();
  ReportBuilder rb("prestarlike", p);

  const std::string left = "(1) w(2)(3-g)(3-2g) a_3 <= 2(2-g) a_2";
  const std::string right = "(1) 2(2-g) a_2 <= a_1";
  if (n >= 3) {
    rb.check(left, std::nullopt, p.weight(2.0) * (3.0 - g) * (3.0 - 2.0 * g) * a[3], 2.0 * (2.0 - g) * a[2]);
  } else {
    rb.vacuous(left);
  }
  if (n >= 2) {
    rb.check(right, std::nullopt, 2.0 * (2.0 - g) * a[2], a[1]);
  } else {
    rb.vacuous(right);
  }
  const std::string two = "(2) w(k+1)(k+2-g)(k+2-2g) a_{k+2} <= w(k)(k+1-g)(k+1) a_{k+1}";
  if (n < 4) rb.vacuous(two);
  for (std::size_t k = 2; k + 2 <= n; ++k) {
    const double kd = dk(k);
    rb.check(two, static_cast<long>(k),
             p.weight(kd + 1.0) * (kd + 2.0 - g) * (kd + 2.0 - 2.0 * g) * a[k + 2],
             p.weight(kd) * (kd + 1.0 - g) * (kd + 1.0) * a[k + 1]);
  }
  return rb.finish({"prestarlike", g, {}});
}

CriterionReport cor_convex(const CoefficientSequence& a, const ParameterSet& p) {
  validate_weights(p);
  require_normalized_positive(a, "cor_convex");
  const std::size_t n = a.degree();
  ReportBuilder rb("convex", p);
  if (n >= 2) {
    rb.check("4 a_2 <= a_1", 2, 4.0 * a[2], a[1]);
  } else {
    rb.vacuous("4 a_2 <= a_1");
  }
  if (n >= 3) {
    rb.check("w(2) 9 a_3 <= 4 a_2", 3, p.weight(2.0) * 9.0 * a[3], 4.0 * a[2]);
  } else {
    rb.vacuous("w(2) 9 a_3 <= 4 a_2");
  }
  for (std::size_t k = 2; k + 2 <= n; ++k) {
    const double kd = dk(k);
    rb.check("w(k+1)(k+2)^2 a_{k+2} <= w(k)(k+1)^2 a_{k+1}", static_cast<long>(k + 2),
             p.weight(kd + 1.0) * (kd + 2.0) * (kd + 2.0) * a[k + 2],
             p.weight(kd) * (kd + 1.0) * (kd + 1.0) * a[k + 1]);
  }
  return rb.finish({"convex", 0.0, {}});
}

CriterionReport cesaro_ctc(const CoefficientSequence& a, const CesaroParams& cp, const ParameterSet& p,
                           CesaroOptions opts) {
  require_cesaro_input(&a, cp, p, opts, "cesaro_ctc");
  const double nd = dk(cp.n());
  ReportBuilder rb("cesaro-close-to-convex", p);
  rb.gate("2(c+n-2) a_2 <= (b+n-2) a_1", 2.0 * (cp.c() + nd - 2.0) * a[2], (cp.b() + nd - 2.0) * a[1]);
  add_cesaro_chain(rb, a, cp, p);
  rb.note("the same conditions are claimed to give a starlike mean");
  return rb.finish({"close-to-convex", std::nullopt, {"z", "z/(1-z)"}});
}

double cesaro_r_gamma_bound(const CoefficientSequence& a, const CesaroParams& cp) {
  const double nd = dk(cp.n());
  return 1.0 - 2.0 * a[2] * (cp.c() + nd - 2.0) / (cp.b() + nd - 2.0);
}

CriterionReport cesaro_r_gamma(const CoefficientSequence& a, const CesaroParams& cp, const ParameterSet& p,
                               CesaroOptions opts) {
  require_cesaro_input(&a, cp, p, opts, "cesaro_r_gamma");
  if (!(p.gamma >= 0.0 && p.gamma < 1.0)) throw std::domain_error("cesaro_r_gamma: gamma must lie in [0, 1)");
  ReportBuilder rb("cesaro-r-gamma", p);
  rb.gate("gamma <= 1 - 2 a_2 (c+n-2)/(b+n-2)", p.gamma, cesaro_r_gamma_bound(a, cp));
  add_cesaro_chain(rb, a, cp, p);
  return rb.finish({"R(gamma)", p.gamma, {}});
}

CriterionReport cesaro_starlike_half(const CoefficientSequence& a, const CesaroParams& cp,
                                     const ParameterSet& p, CesaroOptions opts) {
  require_cesaro_input(&a, cp, p, opts, "cesaro_starlike_half");
  const double b = cp.b();
  const double c = cp.c();
  const std::size_t n = cp.n();
  const double nd = dk(n);
  const double al = p.alpha, be = p.beta, la = p.lambda, mu = p.mu;
  const double s = la + mu;
  const double order = s - 0.5;

  ParameterSet recorded = p;
  recorded.gamma = order;
  ReportBuilder rb("cesaro-starlike", recorded);

  rb.check("(1) (5-2s)(c+n-2) a_2 <= (3-2s)(b+n-2) a_1", std::nullopt, (5.0 - 2.0 * s) * (c + nd - 2.0) * a[2],
           (3.0 - 2.0 * s) * (b + nd - 2.0) * a[1]);
  const std::string two = "(2) 2^{s+2}(7-2s)(c+n-3) a_3 <= (2-al)(2-bm)(5-2s)(b+n-3) a_2";
  if (n >= 3) {
    rb.check(two, std::nullopt, std::pow(2.0, s + 2.0) * (7.0 - 2.0 * s) * (c + nd - 3.0) * a[3],
             (2.0 - al * la) * (2.0 - be * mu) * (5.0 - 2.0 * s) * (b + nd - 3.0) * a[2]);
  } else {
    rb.vacuous(two);
  }
  const std::string three =
      "(3) (2k+3-2s)(k-1+a)(k-1+b)(c+n-k-1) a_{k+1} <= (2k+1-2s)(k-1+a-l)(k-1+b-m)(b+n-k-1) a_k";
  if (n < 5) rb.vacuous(three);
  for (std::size_t k = 3; k + 2 <= n; ++k) {
    const double kd = dk(k);
    rb.check(three, static_cast<long>(k),
             (2.0 * kd + 3.0 - 2.0 * s) * (kd - 1.0 + al) * (kd - 1.0 + be) * (c + nd - kd - 1.0) * a[k + 1],
             (2.0 * kd + 1.0 - 2.0 * s) * (kd - 1.0 + al - la) * (kd - 1.0 + be - mu) * (b + nd - kd - 1.0) * a[k]);
  }
  rb.check("(4) (n-2+a)(n-2+b)(2n+3-2s) c a_n <= (n-2+a-l)(n-2+b-m)(2n+1-2s)(1+b-c) a_{n-1}", std::nullopt,
           (nd - 2.0 + al) * (nd - 2.0 + be) * (2.0 * nd + 3.0 - 2.0 * s) * c * a[n],
           (nd - 2.0 + al - la) * (nd - 2.0 + be - mu) * (2.0 * nd + 1.0 - 2.0 * s) * (1.0 + b - c) * a[n - 1]);

  if (s >= 1.5) rb.note("3 - 2(lambda+mu) <= 0: condition (1) cannot hold for positive a_2");
  if (order >= 1.0) rb.note("derived order lambda+mu-1/2 >= 1 lies outside [0, 1)");
  return rb.finish({"starlike", order, {}});
}

CriterionReport cesaro_prestarlike(const CesaroParams& cp, const ParameterSet& p, CesaroOptions opts) {
  require_cesaro_input(nullptr, cp, p, opts, "cesaro_prestarlike");
  if (!(p.gamma >= 0.0 && p.gamma < 1.0)) throw std::domain_error("cesaro_prestarlike: gamma must lie in [0, 1)");
  const double b = cp.b();
  const double c = cp.c();
  const std::size_t n = cp.n();
  const double nd = dk(n);
  const double g = p.gamma;
  ReportBuilder rb("cesaro-prestarlike", p);

  rb.check("(1) 2(2-g)(c+n-2) <= b+n-2", std::nullopt, 2.0 * (2.0 - g) * (c + nd - 2.0), b + nd - 2.0);
  const std::string two = "(2) w(2)(3-g)(3-2g)(c+n-3) <= 2(2-g)(b+n-3)";
  if (n >= 3) {
    rb.check(two, std::nullopt, p.weight(2.0) * (3.0 - g) * (3.0 - 2.0 * g) * (c + nd - 3.0),
             2.0 * (2.0 - g) * (b + nd - 3.0));
  } else {
    rb.vacuous(two);
  }
  const std::string three = "(3) w(k+1)(k+2-g)(k+2-2g)(c+n-k-2) <= w(k)(k+1-g)(k+1)(b+n-k-2)";
  if (n < 5) rb.vacuous(three);
  for (std::size_t k = 2; k + 3 <= n; ++k) {
    const double kd = dk(k);
    rb.check(three, static_cast<long>(k),
             p.weight(kd + 1.0) * (kd + 2.0 - g) * (kd + 2.0 - 2.0 * g) * (c + nd - kd - 2.0),
             p.weight(kd) * (kd + 1.0 - g) * (kd + 1.0) * (b + nd - kd - 2.0));
  }
  rb.check("(4) w(n-1)(n-g)(n-2g) c <= w(n-2)(n-1-g)(n-1)(1+b-c)", std::nullopt,
           p.weight(nd - 1.0) * (nd - g) * (nd - 2.0 * g) * c,
           p.weight(nd - 2.0) * (nd - 1.0 - g) * (nd - 1.0) * (1.0 + b - c));
  return rb.finish({"prestarlike", g, {}});
}

CriterionReport cesaro_ctc_odd(const CoefficientSequence& a, const CesaroParams& cp, const ParameterSet& p,
                               CesaroOptions opts) {
  require_cesaro_input(&a, cp, p, opts, "cesaro_ctc_odd");
  const double b = cp.b();
  const double c = cp.c();
  const std::size_t n = cp.n();
  const double nd = dk(n);
  const double al = p.alpha, be = p.beta, la = p.lambda, mu = p.mu;
  ReportBuilder rb("cesaro-close-to-convex-odd", p);

  rb.check("(1) (c+n-2) 2^{l+m+3} a_2 <= (2-al)(2-bm)(b+n-2) a_1", std::nullopt,
           (c + nd - 2.0) * std::pow(2.0, la + mu + 3.0) * a[2],
           (2.0 - al * la) * (2.0 - be * mu) * (b + nd - 2.0) * a[1]);
  const std::string two = "(2) (k+a)(k+b)(c+n-k-1)(k+1) a_{k+1} <= k(k+a-l)(k+b-m)(b+n-k-1) a_k";
  if (n < 4) rb.vacuous(two);
  for (std::size_t k = 2; k + 2 <= n; ++k) {
    const double kd = dk(k);
    rb.check(two, static_cast<long>(k), (kd + al) * (kd + be) * (c + nd - kd - 1.0) * (kd + 1.0) * a[k + 1],
             kd * (kd + al - la) * (kd + be - mu) * (b + nd - kd - 1.0) * a[k]);
  }
  rb.check("(3) c(n-1+a)(n-1+b) n a_n <= (n-1+a-l)(n-1+b-m)(1+b-c)(n-1) a_{n-1}", std::nullopt,
           c * (nd - 1.0 + al) * (nd - 1.0 + be) * nd * a[n],
           (nd - 1.0 + al - la) * (nd - 1.0 + be - mu) * (1.0 + b - c) * (nd - 1.0) * a[n - 1]);
  return rb.finish({"close-to-convex", std::nullopt, {"z/(1-z^2)"}});
}

double example_delta_bound(DeltaBoundKind kind, std::size_t n, const ParameterSet& p) {
  validate_weights(p);
  const double nd = dk(n);
  const double al = p.alpha, be = p.beta, la = p.lambda, mu = p.mu;
  if (kind == DeltaBoundKind::kCloseToConvex) {
    const double s = la + mu;
    const double second = (nd - 2.0) * (std::pow(2.0, s + 2.0) / ((2.0 - al * la) * (2.0 - be * mu)) - 1.0);
    const double third =
        (nd - 3.0) * ((2.0 * s + al * mu + be * la + la * mu) / ((2.0 + al - la) * (2.0 + be - mu)));
    return std::max({0.0, second, third});
  }
  const double g = p.gamma;
  const double first = (nd - 1.0) * (3.0 - 2.0 * g);
  const double second =
      (nd - 2.0) * (p.weight(2.0) * (3.0 - g) * (3.0 - 2.0 * g) / (2.0 * (2.0 - g)) - 1.0);
  const double third = (nd - 3.0) * (p.weight(3.0) * (4.0 - g) * (4.0 - 2.0 * g) /
                                         (p.weight(2.0) * (3.0 - g) * 3.0) -
                                     1.0);
  return std::max({first, second, third});
}

}  // namespace univalent
