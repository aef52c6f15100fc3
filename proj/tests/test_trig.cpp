#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "univalent/sampling.hpp"
#include "univalent/trig.hpp"

using namespace univalent;

namespace {

constexpr double kPi = std::numbers::pi;

double dense_min(const TrigCoefficients& t, SumKind kind, std::size_t points = 100000) {
  return oracle::dense_min([&](double th) { return oracle::trig_direct(t.b0, t.b, kind == SumKind::kSine, th); },
                           points)
      .value;
}

}  // namespace

TEST_CASE("vietoris coefficients") {
  const auto t = vietoris_general_coeffs(ParameterSet{0, 0, 1, 0, 0}, 4);
  CHECK(t.b0 == 2.0);
  REQUIRE(t.b.size() == 4);
  CHECK(t.b[0] == 1.0);
  CHECK(t.b[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(t.b[2] == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(t.b[3] == doctest::Approx(0.25).epsilon(1e-15));

  const auto u = vietoris_general_coeffs(ParameterSet{1, 1, 0.5, 0.5, 0}, 3);
  CHECK(u.b[1] == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(u.b[2] == doctest::Approx(0.25).epsilon(1e-15));

  const auto v = vietoris_general_coeffs(ParameterSet{0.5, 2, 1, 0.5, 0}, 2);
  CHECK(v.b[1] == doctest::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("vietoris coefficients reject bad parameters") {
  CHECK_THROWS_AS((void)vietoris_general_coeffs(ParameterSet{0, 0, 0.5, 0.4, 0}, 3), std::domain_error);
  CHECK_THROWS_AS((void)vietoris_general_coeffs(ParameterSet{-0.1, 0, 1, 0, 0}, 3), std::domain_error);
  CHECK_THROWS_AS((void)vietoris_general_coeffs(ParameterSet{0, 0, 1, -0.5, 0}, 3), std::domain_error);
  CHECK_THROWS_AS((void)vietoris_general_coeffs(ParameterSet{0, 0, 1, 0, 0}, 0), std::invalid_argument);
}

TEST_CASE("chain condition examples") {
  const std::vector<double> a{1, 0.5, 1.0 / 9, 1.0 / 16};
  const auto bad = check_chain_condition(2.0, a, ParameterSet{0, 0, 2, 0, 0});
  CHECK_FALSE(bad.all_satisfied);
  REQUIRE(bad.first_failure() != nullptr);
  CHECK(bad.first_failure()->k == 2);
  CHECK(bad.first_failure()->lhs == doctest::Approx(2.0));
  CHECK(bad.first_failure()->rhs == 1.0);

  const ParameterSet p{1, 1, 0.5, 0.5, 0};
  const auto t = vietoris_general_coeffs(p, 30);
  const auto eq = check_chain_condition(2.0, t.b, p);
  CHECK(eq.all_satisfied);
  for (const auto& c : eq.conditions) CHECK(c.lhs == doctest::Approx(c.rhs).epsilon(1e-14));

  const std::vector<double> small{1, 0.1, 0.01};
  CHECK(check_chain_condition(2.0, small, ParameterSet{1, 1, 1, 0, 0}).all_satisfied);

  const std::vector<double> nonpositive{1, 0.0};
  CHECK_THROWS_AS((void)check_chain_condition(2.0, nonpositive, p), std::invalid_argument);
}

TEST_CASE("chain tolerance admits rounding on equality links") {
  const ParameterSet p{0, 0, 1, 0, 0};
  const std::vector<double> a{1.0, 0.5 * (1 + 5e-13)};
  CHECK(check_chain_condition(2.0, a, p).all_satisfied);
  const std::vector<double> b{1.0, 0.5 * (1 + 1e-9)};
  CHECK_FALSE(check_chain_condition(2.0, b, p).all_satisfied);
}

TEST_CASE("trigonometric sum values") {
  CHECK(sine_sum(TrigCoefficients{2.0, {1.0}}, kPi / 2) == doctest::Approx(1.0));
  CHECK(cosine_sum(TrigCoefficients{2.0, {}}, 0.7) == 1.0);
  const auto t = vietoris_general_coeffs(ParameterSet{0, 0, 1, 0, 0}, 3);
  CHECK(sine_sum(t, kPi / 3) == doctest::Approx(1.5 * std::sqrt(3.0) / 2).epsilon(1e-14));
  CHECK(trig_sum(t, SumKind::kCosine, 0.4) == cosine_sum(t, 0.4));
}

TEST_CASE("sums match direct evaluation for large degree") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0), th(1e-3, kPi - 1e-3);
  for (std::size_t n : {10u, 1000u, 10000u}) {
    TrigCoefficients t{2.0, std::vector<double>(n)};
    double scale = 1.0;
    for (auto& b : t.b) {
      b = u(rng);
      scale += b;
    }
    for (int i = 0; i < 5; ++i) {
      const double x = th(rng);
      CHECK(std::abs(cosine_sum(t, x) - oracle::trig_direct(2.0, t.b, false, x)) <= 1e-12 * scale);
      CHECK(std::abs(sine_sum(t, x) - oracle::trig_direct(2.0, t.b, true, x)) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("odd harmonic sine sums are symmetric about pi/2") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0), th(0.0, kPi);
  TrigCoefficients t{2.0, std::vector<double>(41, 0.0)};
  for (std::size_t k = 1; k <= 41; k += 2) t.b[k - 1] = u(rng);
  for (int i = 0; i < 100; ++i) {
    const double x = th(rng);
    CHECK(sine_sum(t, kPi - x) == doctest::Approx(sine_sum(t, x)).epsilon(1e-12));
  }
}

TEST_CASE("theta grid") {
  const ThetaGrid g{7};
  CHECK(g.point(1) == doctest::Approx(kPi / 8));
  CHECK(g.point(7) == doctest::Approx(7 * kPi / 8));
  CHECK(g.point(1) > 0.0);
  CHECK(g.point(7) < kPi);
  CHECK(ThetaGrid::for_degree(10).count == 4096);
  CHECK(ThetaGrid::for_degree(1000).count == 8000);
}

TEST_CASE("positivity scan examples") {
  const auto fj = vietoris_general_coeffs(ParameterSet{0, 0, 1, 0, 0}, 10);
  const auto r = positivity_scan(fj, SumKind::kSine, ThetaGrid::for_degree(10));
  CHECK(r.positive);
  CHECK(r.min_value > 0.0);
  CHECK(dense_min(fj, SumKind::kSine) > 0.0);

  const TrigCoefficients geo{2.0, {1.0, 1.0}};
  const auto neg = positivity_scan(geo, SumKind::kSine, ThetaGrid::for_degree(2));
  CHECK_FALSE(neg.positive);
  CHECK(neg.min_value < 0.0);
  CHECK(neg.argmin_theta > 2 * kPi / 3);
  CHECK(neg.argmin_theta < kPi);
  CHECK(neg.refined);
  CHECK(neg.min_value == doctest::Approx(dense_min(geo, SumKind::kSine)).epsilon(1e-8));

  const TrigCoefficients one{2.0, {1.0}};
  const auto s = positivity_scan(one, SumKind::kSine, ThetaGrid::for_degree(1));
  CHECK(s.positive);
  CHECK((s.argmin_theta < 0.01 || s.argmin_theta > kPi - 0.01));
}

TEST_CASE("positivity scan requires an oversampled grid") {
  const auto t = vietoris_general_coeffs(ParameterSet{0, 0, 1, 0, 0}, 100);
  CHECK_THROWS_AS((void)positivity_scan(t, SumKind::kCosine, ThetaGrid{799}), std::invalid_argument);
  CHECK_NOTHROW((void)positivity_scan(t, SumKind::kCosine, ThetaGrid{800}));
}

TEST_CASE("positivity scan reports positive exactly when the minimum is positive") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    TrigCoefficients t{2.0, std::vector<double>(1 + i % 12)};
    for (auto& b : t.b) b = u(rng);
    for (SumKind kind : {SumKind::kCosine, SumKind::kSine}) {
      const auto r = positivity_scan(t, kind, ThetaGrid::for_degree(t.degree()));
      CHECK(r.positive == (r.min_value > 0.0));
      CHECK(r.argmin_theta > 0.0);
      CHECK(r.argmin_theta < kPi);
    }
  }
}

TEST_CASE("positivity scan minimum agrees with a dense grid over the same span") {
  const ParameterSet params[] = {{0, 0, 1, 0, 0}, {1, 1, 0.5, 0.5, 0}, {2, 0.5, 0.75, 0.75, 0}, {0, 2, 0, 1, 0}};
  for (const auto& p : params) {
    for (std::size_t n : {2u, 7u, 25u}) {
      const auto t = vietoris_general_coeffs(p, n);
      const ThetaGrid g = ThetaGrid::for_degree(n);
      const auto r = positivity_scan(t, SumKind::kCosine, g);
      const double dense =
          oracle::dense_min_on([&](double th) { return oracle::trig_direct(t.b0, t.b, false, th); }, g.point(1),
                               g.point(g.count))
              .value;
      CHECK(r.min_value <= dense + 1e-12);
      CHECK(r.min_value == doctest::Approx(dense).epsilon(1e-6));
    }
  }
}

TEST_CASE("grid doubling leaves interior minima unchanged") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int interior = 0;
  for (int i = 0; i < 200; ++i) {
    TrigCoefficients t{u(rng) * 2.0, std::vector<double>(2 + i % 20)};
    for (auto& b : t.b) b = u(rng);
    for (SumKind kind : {SumKind::kCosine, SumKind::kSine}) {
      const ThetaGrid g = ThetaGrid::for_degree(t.degree());
      const auto a = positivity_scan(t, kind, g);
      const auto b = positivity_scan(t, kind, ThetaGrid{2 * g.count});
      if (a.argmin_theta < 0.01 || a.argmin_theta > kPi - 0.01) continue;
      ++interior;
      CHECK(std::abs(a.min_value - b.min_value) <= 1e-9);
    }
  }
  CHECK(interior > 200);
}

TEST_CASE("vietoris sums are positive on a parameter lattice") {
  const double shifts[] = {0.0, 1.0, 2.0};
  const std::pair<double, double> exps[] = {{1, 0}, {0, 1}, {0.5, 0.5}, {1, 0.5}};
  for (double al : shifts) {
    for (double be : shifts) {
      for (const auto& [la, mu] : exps) {
        for (std::size_t n : {2u, 9u, 40u}) {
          const auto t = vietoris_general_coeffs(ParameterSet{al, be, la, mu, 0}, n);
          for (SumKind kind : {SumKind::kCosine, SumKind::kSine}) {
            CHECK(positivity_scan(t, kind, ThetaGrid::for_degree(n)).positive);
          }
        }
      }
    }
  }
}

TEST_CASE("chain sequences give positive sums") {
  Sampler s(101);
  for (int i = 0; i < 150; ++i) {
    const ParameterSet p = sample_weight_params(s);
    const std::size_t n = s.integer(2, 40);
    const auto a = sample_chain_sequence(s, p, n);
    REQUIRE(check_chain_condition(2.0, a, p).all_satisfied);
    const TrigCoefficients t{2.0, a};
    for (SumKind kind : {SumKind::kCosine, SumKind::kSine}) {
      CHECK(positivity_scan(t, kind, ThetaGrid::for_degree(n)).positive);
      CHECK(dense_min(t, kind, 10000) > 0.0);
    }
  }
}
