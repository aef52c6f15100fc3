#include "univalent/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "univalent/cesaro.hpp"
#include "univalent/criteria.hpp"
#include "univalent/experiment.hpp"
#include "univalent/report_json.hpp"
#include "univalent/trig.hpp"
#include "univalent/verifiers.hpp"

namespace univalent {

using nlohmann::json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t derive_seed(std::uint64_t seed, int id) {
  return seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(id) * 1000003ULL;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool close_rel(double x, double y, double tol) {
  if (x == y) return true;
  return std::abs(x - y) <= tol * std::max(1.0, std::max(std::abs(x), std::abs(y)));
}

// ---------------------------------------------------------------- positivity

CaseResult positivity_lattice() {
  const auto start = std::chrono::steady_clock::now();
  const double shifts[] = {0.0, 0.5, 1.0, 2.0};
  const std::pair<double, double> exponents[] = {{1, 0}, {0, 1}, {0.5, 0.5}, {1, 0.5}, {0.75, 0.75}};
  const std::size_t degrees[] = {2, 5, 10, 25, 50, 100};
  std::size_t scans = 0, failures = 0;
  double worst = kInf;
  json first_failure = nullptr;
  for (double al : shifts) {
    for (double be : shifts) {
      for (const auto& [la, mu] : exponents) {
        for (std::size_t n : degrees) {
          const ParameterSet p{al, be, la, mu, 0.0};
          const auto t = vietoris_general_coeffs(p, n);
          for (SumKind kind : {SumKind::kCosine, SumKind::kSine}) {
            const auto r = positivity_scan(t, kind, ThetaGrid::for_degree(n));
            ++scans;
            worst = std::min(worst, r.min_value);
            if (!r.positive) {
              ++failures;
              if (first_failure.is_null()) {
                first_failure = json{{"params", p}, {"n", n}, {"kind", kind == SumKind::kSine ? "sine" : "cosine"},
                                     {"scan", r}};
              }
            }
          }
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  CaseResult out{1, "vietoris lattice positivity", failures == 0 && elapsed < 30.0, {}};
  out.detail = json{{"scans", scans}, {"failures", failures}, {"smallest_minimum", worst}, {"seconds", elapsed}};
  if (!first_failure.is_null()) out.detail["first_failure"] = first_failure;
  return out;
}

CaseResult chain_positivity(std::uint64_t seed) {
  Sampler s(seed);
  std::size_t failures = 0, chain_rejects = 0;
  double worst = kInf;
  json first_failure = nullptr;
  constexpr std::size_t kCases = 1000;
  for (std::size_t i = 0; i < kCases; ++i) {
    const ParameterSet p = sample_weight_params(s);
    const std::size_t n = s.integer(2, 60);
    const auto a = sample_chain_sequence(s, p, n);
    if (!check_chain_condition(2.0, a, p).all_satisfied) {
      ++chain_rejects;
      continue;
    }
    const TrigCoefficients t{2.0, a};
    for (SumKind kind : {SumKind::kCosine, SumKind::kSine}) {
      const auto r = positivity_scan(t, kind, ThetaGrid::for_degree(n));
      worst = std::min(worst, r.min_value);
      if (!r.positive) {
        ++failures;
        if (first_failure.is_null()) first_failure = json{{"params", p}, {"a", a}, {"scan", r}};
      }
    }
  }
  CaseResult out{2, "chain implies positive sums", failures == 0 && chain_rejects == 0, {}};
  out.detail = json{{"sequences", kCases}, {"failures", failures}, {"chain_rejects", chain_rejects},
                    {"smallest_minimum", worst}};
  if (!first_failure.is_null()) out.detail["first_failure"] = first_failure;
  return out;
}

// ------------------------------------------------------------------ examples

CoefficientSequence inverse_square(std::size_t n) { return generate_sequence("inverse-square", n, {}); }
CoefficientSequence inverse_cube(std::size_t n) { return generate_sequence("inverse-cube", n, {}); }

ParameterSet example_params() { return ParameterSet{1.0, 1.0, 0.5, 0.5, 0.0}; }

CaseResult example_starlike() {
  const auto a = inverse_square(200);
  const auto rep = thm_starlike(a, example_params());
  double gap = 0.0;
  for (const auto& c : rep.conditions) {
    if (!c.vacuous) gap = std::max(gap, std::abs(c.lhs - c.rhs) / std::max(1.0, std::abs(c.rhs)));
  }
  const auto ver = verify_starlike(a, 0.0);
  bool inner_positive = true;
  for (const auto& m : ver.per_radius) {
    if (m.radius <= 0.99 && !(m.margin > 0.0)) inner_positive = false;
  }
  const auto* outer = ver.at_radius(0.999);
  const bool outer_ok = outer != nullptr && outer->margin > -1e-6;
  CaseResult out{3, "inverse-square sequence is starlike", rep.all_satisfied && gap <= 1e-12 && inner_positive && outer_ok,
                 {}};
  out.detail = json{{"all_satisfied", rep.all_satisfied}, {"largest_equality_gap", gap}, {"verification", ver}};
  return out;
}

CaseResult example_convex() {
  const auto a = inverse_cube(200);
  const auto rep = cor_convex(a, example_params());
  const auto ver = verify_convex(a, 0.0);
  bool inner = true;
  for (const auto& m : ver.per_radius) {
    if (m.radius <= 0.99 && !(m.margin > -ver.tolerance)) inner = false;
  }
  CaseResult out{4, "inverse-cube sequence is convex", rep.all_satisfied && inner, {}};
  out.detail = json{{"all_satisfied", rep.all_satisfied}, {"verification", ver}};
  return out;
}

std::vector<CaseResult> negative_controls() {
  std::vector<CaseResult> out;
  {
    const auto ver = verify_starlike(CoefficientSequence{1.0, 1.0}, 0.0);
    const bool at_negative_axis = std::abs(ver.witness.real() + 0.999) < 1e-12 && ver.witness.imag() == 0.0;
    out.push_back({10, "z + z^2 is not starlike", !ver.holds && ver.margin < 0.0 && at_negative_axis,
                   json{{"verification", ver}}});
  }
  {
    const TrigCoefficients t{2.0, {1.0, 1.0}};
    const auto r = positivity_scan(t, SumKind::kSine, ThetaGrid::for_degree(2));
    const bool located = r.argmin_theta > 2.0 * std::numbers::pi / 3.0 && r.argmin_theta < std::numbers::pi;
    out.push_back({10, "sin t + sin 2t takes negative values", !r.positive && r.min_value < 0.0 && located,
                   json{{"scan", r}}});
  }
  {
    const auto rep = thm_starlike(CoefficientSequence{1.0, 0.6, 0.1}, ParameterSet{});
    const auto* f = rep.first_failure();
    const bool first = f != nullptr && f->label.rfind("(1)", 0) == 0;
    out.push_back({10, "a_2 = 0.6 violates the first starlike condition", !rep.all_satisfied && first,
                   json{{"report", rep}}});
  }
  return out;
}

// ------------------------------------------------------------------- duality

CaseResult alexander_duality(std::uint64_t seed) {
  Sampler s(seed);
  std::size_t compared = 0, mismatches = 0;
  double worst = 0.0;
  json first_mismatch = nullptr;
  for (std::size_t i = 0; i < 100; ++i) {
    const std::size_t n = s.integer(2, 64);
    const double rho = s.uniform(0.1, 1.5);
    std::vector<double> a(n);
    a[0] = 1.0;
    double scale = 1.0;
    for (std::size_t k = 2; k <= n; ++k) {
      scale *= rho;
      a[k - 1] = s.uniform(0.0, 1.0) * scale / static_cast<double>(k * k) + 1e-300;
    }
    const CoefficientSequence f(std::move(a));
    const auto g = alexander_transform(f);
    for (double gamma : {0.0, 0.3, 0.7}) {
      const auto convex = verify_convex(f, gamma);
      const auto star = verify_starlike(g, gamma);
      ++compared;
      const bool same = close_rel(convex.margin, star.margin, 1e-10) && convex.holds == star.holds;
      if (std::isfinite(convex.margin) && std::isfinite(star.margin)) {
        worst = std::max(worst, std::abs(convex.margin - star.margin) / std::max(1.0, std::abs(convex.margin)));
      }
      if (!same) {
        ++mismatches;
        if (first_mismatch.is_null()) first_mismatch = json{{"f", f}, {"gamma", gamma}, {"convex", convex}, {"starlike", star}};
      }
    }
  }
  CaseResult out{5, "alexander duality of convex and starlike margins", mismatches == 0, {}};
  out.detail = json{{"comparisons", compared}, {"mismatches", mismatches}, {"largest_relative_gap", worst}};
  if (!first_mismatch.is_null()) out.detail["first_mismatch"] = first_mismatch;
  return out;
}

// --------------------------------------------------------------- equivalence

// Sequences for the order-gamma starlike/prestarlike comparison: a third
// saturate every condition, a third decay freely, the rest saturate and then
// break one link slightly.
CoefficientSequence equivalence_sequence(Sampler& s, const ParameterSet& p, std::size_t n, int kind) {
  const double g = p.gamma;
  std::vector<double> a(n);
  a[0] = 1.0;
  for (std::size_t m = 2; m <= n; ++m) {
    const double md = static_cast<double>(m);
    double bound;
    if (m == 2) {
      bound = (1.0 - g) / (2.0 - g);
    } else if (m == 3) {
      bound = (2.0 - g) * a[1] / (p.weight(2.0) * (3.0 - g));
    } else {
      const double k = md - 2.0;
      bound = p.weight(k) * (k + 1.0 - g) * a[m - 2] / (p.weight(k + 1.0) * (k + 2.0 - g));
    }
    a[m - 1] = kind == 0 ? bound : kind == 1 ? bound * s.uniform(0.0, 2.0) : bound;
  }
  if (kind == 2) {
    const std::size_t j = s.integer(1, n - 1);
    a[j] *= s.coin(0.5) ? 1.0 + 1e-6 : 1.0 - 1e-6;
  }
  for (double& x : a) x = std::max(x, 1e-300);
  return CoefficientSequence(std::move(a));
}

CaseResult remark_equivalence(std::uint64_t seed) {
  Sampler s(seed);
  std::size_t disagreements = 0, boundary = 0, satisfied = 0;
  json first = nullptr;
  for (std::size_t i = 0; i < 1000; ++i) {
    ParameterSet p = sample_weight_params(s);
    p.gamma = 0.5;
    const std::size_t n = s.integer(2, 40);
    const int kind = static_cast<int>(i % 3);
    const auto a = equivalence_sequence(s, p, n, kind);
    if (kind == 0) ++boundary;
    const auto star = thm_starlike(a, p);
    const auto pre = thm_prestarlike(a, p);
    satisfied += star.all_satisfied ? 1 : 0;
    if (star.all_satisfied != pre.all_satisfied) {
      ++disagreements;
      if (first.is_null()) first = json{{"a", a}, {"starlike", star}, {"prestarlike", pre}};
    }
  }
  CaseResult out{6, "prestarlike and starlike criteria agree at order 1/2", disagreements == 0 && boundary >= 50, {}};
  out.detail = json{{"sequences", 1000}, {"boundary_equality", boundary}, {"satisfied", satisfied},
                    {"disagreements", disagreements}};
  if (!first.is_null()) out.detail["first_disagreement"] = first;
  return out;
}

CaseResult convex_prestarlike_equivalence(std::uint64_t seed) {
  Sampler s(seed);
  std::size_t disagreements = 0, satisfied = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    ParameterSet p = sample_weight_params(s);
    p.gamma = 0.0;
    const std::size_t n = s.integer(2, 40);
    std::vector<double> a(n);
    a[0] = 1.0;
    const int kind = static_cast<int>(i % 3);
    for (std::size_t m = 2; m <= n; ++m) {
      const double md = static_cast<double>(m);
      double bound;
      if (m == 2) {
        bound = 0.25;
      } else if (m == 3) {
        bound = 4.0 * a[1] / (9.0 * p.weight(2.0));
      } else {
        bound = p.weight(md - 2.0) * (md - 1.0) * (md - 1.0) * a[m - 2] / (p.weight(md - 1.0) * md * md);
      }
      a[m - 1] = kind == 1 ? bound * s.uniform(0.0, 2.0) : bound;
    }
    if (kind == 2) a[s.integer(1, n - 1)] *= 1.0 + 1e-6;
    for (double& x : a) x = std::max(x, 1e-300);
    const CoefficientSequence f(std::move(a));
    const auto conv = cor_convex(f, p);
    satisfied += conv.all_satisfied ? 1 : 0;
    if (conv.all_satisfied != thm_prestarlike(f, p).all_satisfied) ++disagreements;
  }
  CaseResult out{0, "convex and order-0 prestarlike criteria agree", disagreements == 0, {}};
  out.detail = json{{"sequences", 1000}, {"satisfied", satisfied}, {"disagreements", disagreements}};
  return out;
}

// -------------------------------------------------------------------- cesaro

std::vector<CaseResult> cesaro_reductions(std::uint64_t seed) {
  std::vector<CaseResult> out;
  {
    bool ones = true, counting = true;
    for (std::size_t n : {2u, 3u, 10u, 50u, 200u, 1000u}) {
      const auto w1 = weights(CesaroParams(1.0, 1.0, n));
      ones = ones && std::all_of(w1.begin(), w1.end(), [](double x) { return x == 1.0; });
      const auto w2 = weights(CesaroParams(2.0, 1.0, n));
      for (std::size_t k = 0; k < w2.size(); ++k) counting = counting && w2[k] == static_cast<double>(k + 1);
    }
    out.push_back({7, "weights for b=1,c=1 and b=2,c=1", ones && counting,
                   json{{"all_ones", ones}, {"counting", counting}}});
  }
  Sampler s(seed);
  std::size_t mismatches = 0, partial_mismatches = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < 100; ++i) {
    const double delta = s.uniform(-0.9, 5.0);
    const std::size_t n = s.integer(2, 200);
    std::vector<double> a(n);
    a[0] = 1.0;
    for (std::size_t k = 1; k < n; ++k) a[k] = s.uniform(-2.0, 2.0);
    const CoefficientSequence f(std::move(a));
    const auto x = classical_cesaro(f, delta, n);
    const auto y = classical_cesaro_factorial(f, delta, n);
    for (std::size_t k = 1; k <= n; ++k) {
      const double gap = std::abs(x[k] - y[k]) / std::max(1.0, std::abs(y[k]));
      worst = std::max(worst, gap);
      if (gap > 1e-13) ++mismatches;
    }
    if (!(cesaro_mean(f, CesaroParams(1.0, 1.0, n)) == f.truncated(n))) ++partial_mismatches;
  }
  out.push_back({7, "classical mean: product and factorial forms agree", mismatches == 0,
                 json{{"cases", 100}, {"mismatched_coefficients", mismatches}, {"largest_relative_gap", worst}}});
  out.push_back({7, "b=1,c=1 mean is the partial sum", partial_mismatches == 0,
                 json{{"cases", 100}, {"mismatches", partial_mismatches}}});
  return out;
}

// Inputs outside the two gaps of the stated hypotheses: n = 2 with c > 1,
// where the first weight ratio c/(1+b-c) exceeds the c/b the conditions
// assume, and a violated k = n-2 link, which no stated condition covers.
bool within_proof_hypotheses(Criterion which, const CriterionInput& in, const CriterionReport& rep) {
  const bool ratio_gap = which == Criterion::kCesaroCloseToConvex || which == Criterion::kCesaroRGamma ||
                         which == Criterion::kCesaroStarlike;
  if (ratio_gap && in.cesaro->n() == 2 && in.cesaro->c() > 1.0) return false;
  return std::none_of(rep.conditions.begin(), rep.conditions.end(),
                      [](const Condition& c) { return !c.counted && !c.vacuous && !c.ok; });
}

CaseResult cesaro_soundness(Criterion which, std::uint64_t seed, const SamplingOptions& sampling) {
  Sampler s(seed);
  DiskGrid grid;
  grid.radii = {0.5, 0.9, 0.99};
  constexpr std::size_t kCases = 200;
  const std::size_t degrees = std::max<std::size_t>(sampling.max_degree, 2) - 1;
  std::size_t accepted = 0, redraws = 0, inconsistent = 0, outside = 0, inconsistent_inside = 0;
  double worst = kInf;
  json first = nullptr;
  const auto start = std::chrono::steady_clock::now();
  while (accepted < kCases) {
    SamplingOptions o = sampling;
    o.degree = 2 + accepted % degrees;
    const auto in = sample_admissible(which, s, o);
    if (!in) {
      if (++redraws > 100 * kCases) break;
      continue;
    }
    ++accepted;
    const auto rep = evaluate_criterion(which, *in);
    const auto checks = cross_verify(which, *in, grid);
    const bool inside = within_proof_hypotheses(which, *in, rep);
    outside += inside ? 0 : 1;
    for (const auto& c : checks) worst = std::min(worst, c.margin);
    if (consistency(rep, checks) == Consistency::kInconsistent) {
      ++inconsistent;
      inconsistent_inside += inside ? 1 : 0;
      if (first.is_null()) {
        first = json{{"params", in->params}, {"cesaro", *in->cesaro}, {"a", in->a},
                     {"target", criterion_target(which, *in)}, {"verification", checks}};
      }
    }
  }
  CaseResult out{8, std::string(criterion_name(which)) + " soundness on sampled inputs",
                 accepted == kCases && inconsistent == 0, {}};
  out.detail = json{{"inputs", accepted},
                    {"redraws", redraws},
                    {"inconsistent", inconsistent},
                    {"outside_proof_hypotheses", outside},
                    {"inconsistent_within_proof_hypotheses", inconsistent_inside},
                    {"smallest_margin", worst},
                    {"seconds", seconds_since(start)}};
  if (!first.is_null()) out.detail["first_inconsistent"] = first;
  return out;
}

CaseResult delta_bound_example() {
  const ParameterSet p = example_params();
  const double bound = example_delta_bound(DeltaBoundKind::kCloseToConvex, 3, p);
  const auto cp = CesaroParams::classical(bound + 1e-9, 3);
  const auto f = generate_sequence("log-series", 3, {});
  const auto rep = cesaro_ctc(f, cp, p);
  const auto mean = cesaro_mean(f, cp);
  const auto wrt_z = verify_close_to_convex(mean, StarlikeFunction::kIdentity, 0.0, 0.0);
  const auto wrt_geo = verify_close_to_convex(mean, StarlikeFunction::kGeometric, 0.0, 0.0);
  const bool ok = bound > 0.0 && bound < 3.0 && rep.all_satisfied && wrt_z.holds && wrt_geo.holds;
  return {9, "log-series mean at the delta bound", ok,
          json{{"delta_bound", bound}, {"report", rep}, {"mean", mean}, {"wrt_z", wrt_z}, {"wrt_geometric", wrt_geo}}};
}

void append(std::vector<CaseResult>& out, std::vector<CaseResult> more) {
  for (auto& r : more) out.push_back(std::move(r));
}

}  // namespace

const std::vector<std::string>& reproduce_suites() {
  static const std::vector<std::string> suites{"positivity", "duality", "equivalence", "cesaro", "examples"};
  return suites;
}

std::vector<CaseResult> run_criterion(int id, const ReproduceOptions& opts) {
  const std::uint64_t seed = derive_seed(opts.seed, id);
  switch (id) {
    case 1: return {positivity_lattice()};
    case 2: return {chain_positivity(seed)};
    case 3: return {example_starlike()};
    case 4: return {example_convex()};
    case 5: return {alexander_duality(seed)};
    case 6: return {remark_equivalence(seed)};
    case 7: return cesaro_reductions(seed);
    case 8: {
      std::vector<CaseResult> out;
      int offset = 0;
      for (Criterion c : {Criterion::kCesaroCloseToConvex, Criterion::kCesaroRGamma, Criterion::kCesaroStarlike,
                          Criterion::kCesaroPrestarlike, Criterion::kCesaroCloseToConvexOdd}) {
        out.push_back(cesaro_soundness(c, seed + static_cast<std::uint64_t>(++offset), opts.sampling));
      }
      return out;
    }
    case 9: return {delta_bound_example()};
    case 10: return negative_controls();
  }
  throw std::invalid_argument("no acceptance criterion " + std::to_string(id));
}

std::vector<CaseResult> run_suite(std::string_view suite, const ReproduceOptions& opts) {
  std::vector<CaseResult> out;
  if (suite == "all") {
    for (const auto& name : reproduce_suites()) append(out, run_suite(name, opts));
    return out;
  }
  if (suite == "positivity") {
    append(out, run_criterion(1, opts));
    append(out, run_criterion(2, opts));
  } else if (suite == "duality") {
    append(out, run_criterion(5, opts));
  } else if (suite == "equivalence") {
    append(out, run_criterion(6, opts));
    out.push_back(convex_prestarlike_equivalence(derive_seed(opts.seed, 60)));
  } else if (suite == "cesaro") {
    append(out, run_criterion(7, opts));
    append(out, run_criterion(8, opts));
    append(out, run_criterion(9, opts));
  } else if (suite == "examples") {
    append(out, run_criterion(3, opts));
    append(out, run_criterion(4, opts));
    append(out, run_criterion(10, opts));
  } else {
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }
  return out;
}

void to_json(json& j, const CaseResult& r) {
  j = json{{"criterion", r.criterion}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
}

}  // namespace univalent
