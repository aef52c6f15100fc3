#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "univalent/experiment.hpp"
#include "univalent/series.hpp"
#include "univalent/series_io.hpp"

using namespace univalent;

namespace {

std::vector<double> as_vector(const CoefficientSequence& f) { return {f.values().begin(), f.values().end()}; }

}  // namespace

TEST_CASE("pochhammer values") {
  CHECK(pochhammer(5.0, 0) == 1.0);
  CHECK(pochhammer(2.0, 3) == 24.0);
  CHECK(pochhammer(0.5, 2) == 0.75);
  CHECK(pochhammer(-3.0, 5) == 0.0);
  CHECK_THROWS_AS((void)pochhammer(10.0, 400), std::overflow_error);
}

TEST_CASE("pochhammer_ratio values") {
  CHECK(pochhammer_ratio(2.0, 1.0, 4) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(pochhammer_ratio(3.0, 3.0, 7) == 1.0);
  // (1.5 * 2.5) / (0.5 * 1.5)
  CHECK(pochhammer_ratio(1.5, 0.5, 2) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(pochhammer_ratio(4.0, 2.0, 0) == 1.0);
  CHECK_THROWS_AS((void)pochhammer_ratio(1.0, -2.0, 4), std::domain_error);
  // (1)_k / (2)_k = 1/(k+1) far past the overflow point of either factor.
  CHECK(pochhammer_ratio(1.0, 2.0, 5000) == doctest::Approx(1.0 / 5001.0).epsilon(1e-12));
}

TEST_CASE("pochhammer_ratio of equal arguments is exactly one") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int i = 0; i < 500; ++i) {
    double x = u(rng);
    if (std::abs(x - std::round(x)) < 1e-3 && x <= 0) x += 0.5;
    const unsigned k = static_cast<unsigned>(i % 40);
    CHECK(pochhammer_ratio(x, x, k) == 1.0);
  }
}

TEST_CASE("coefficient sequence construction") {
  CHECK_THROWS_AS(CoefficientSequence(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(CoefficientSequence({1.0, NAN}), std::invalid_argument);
  const CoefficientSequence f{1.0, 0.5, 0.25};
  CHECK(f.degree() == 3);
  CHECK(f[0] == 0.0);
  CHECK(f[2] == 0.5);
  CHECK(f[4] == 0.0);
  CHECK(f.is_normalized());
  CHECK(f.truncated(2) == CoefficientSequence{1.0, 0.5});
  CHECK(f.truncated(10) == f);
  CHECK_THROWS_AS(require_normalized_positive(CoefficientSequence{2.0, 1.0}, "t"), std::invalid_argument);
  CHECK_THROWS_AS(require_normalized_positive(CoefficientSequence{1.0, 0.0}, "t"), std::invalid_argument);
  CHECK_NOTHROW(require_normalized_positive(f, "t"));
}

TEST_CASE("evaluate small cases") {
  CHECK(evaluate(CoefficientSequence{1.0}, {0.5, 0.0}) == ComplexPoint(0.5, 0.0));
  const auto v = evaluate(CoefficientSequence{1.0, 1.0}, {0.0, 0.5});
  CHECK(v.real() == doctest::Approx(-0.25));
  CHECK(v.imag() == doctest::Approx(0.5));
}

TEST_CASE("evaluate agrees with naive summation on the inverse-square sequence") {
  const auto f = generate_sequence("inverse-square", 200, {});
  const auto fast = evaluate(f, {0.9, 0.0});
  const auto slow = oracle::naive_sum(as_vector(f), {0.9, 0.0});
  CHECK(std::abs(fast - slow) <= 1e-12 * std::abs(slow));
}

TEST_CASE("Horner evaluation matches naive summation on random polynomials") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coef(-1.0, 1.0), radius(0.0, 0.999), angle(0.0, 2 * std::numbers::pi);
  std::uniform_int_distribution<std::size_t> deg(1, 512);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> a(deg(rng));
    a[0] = 1.0;
    for (std::size_t k = 1; k < a.size(); ++k) a[k] = coef(rng) / std::sqrt(k + 1.0);
    const ComplexPoint z = std::polar(radius(rng), angle(rng));
    const auto fast = evaluate(CoefficientSequence(a), z);
    const auto slow = oracle::naive_sum(a, z);
    double scale = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) scale += std::abs(a[k]) * std::pow(std::abs(z), k + 1.0);
    CHECK(std::abs(fast - slow) <= 1e-12 * std::max(std::abs(slow), scale));
  }
}

TEST_CASE("derivative coefficients") {
  CHECK(derivative(CoefficientSequence{1.0}) == std::vector<double>{1.0});
  const auto d = derivative(CoefficientSequence{1.0, 0.5, 1.0 / 3.0});
  REQUIRE(d.size() == 3);
  CHECK(d[0] == 1.0);
  CHECK(d[1] == 1.0);
  CHECK(d[2] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(derivative(CoefficientSequence{1.0, 0.25}) == std::vector<double>{1.0, 0.5});
}

TEST_CASE("integrate inverts derivative") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto a = oracle::random_positive(rng, 1 + i);
    const CoefficientSequence f(a);
    const auto g = integrate(derivative(f));
    for (std::size_t k = 1; k <= f.degree(); ++k) CHECK(g[k] == doctest::Approx(f[k]).epsilon(1e-15));
  }
}

TEST_CASE("hadamard product") {
  const CoefficientSequence f{1.0, 0.3, -0.2, 0.7};
  CHECK(hadamard(f, standard_starlike(StarlikeFunction::kGeometric, 4)) == f);
  CHECK(hadamard(CoefficientSequence{1.0, 2.0, 3.0}, CoefficientSequence{1.0, 0.5, 1.0 / 3.0}) ==
        CoefficientSequence{1.0, 1.0, 1.0});
  CHECK(hadamard(f, prestar_kernel(0.5, 4)) == f);
  CHECK(hadamard(f, CoefficientSequence{1.0, 1.0}).degree() == 2);
}

TEST_CASE("hadamard is commutative and associative") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const CoefficientSequence f(oracle::random_positive(rng, 20));
    const CoefficientSequence g(oracle::random_positive(rng, 15));
    const CoefficientSequence h(oracle::random_positive(rng, 30));
    CHECK(hadamard(f, g) == hadamard(g, f));
    const auto left = hadamard(hadamard(f, g), h);
    const auto right = hadamard(f, hadamard(g, h));
    for (std::size_t k = 1; k <= left.degree(); ++k) CHECK(left[k] == doctest::Approx(right[k]).epsilon(1e-15));
  }
}

TEST_CASE("prestar kernel coefficients") {
  const auto half = prestar_kernel(0.5, 10);
  for (double c : half.values()) CHECK(c == 1.0);
  const auto koebe = prestar_kernel(0.0, 10);
  for (std::size_t k = 1; k <= 10; ++k) CHECK(koebe[k] == static_cast<double>(k));
  CHECK(prestar_kernel(0.25, 3)[3] == doctest::Approx(1.875));
  CHECK_THROWS_AS((void)prestar_kernel(1.0, 3), std::domain_error);
  CHECK_THROWS_AS((void)prestar_kernel(-0.1, 3), std::domain_error);
}

TEST_CASE("Koebe kernel convolution is the Alexander transform") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    const CoefficientSequence f(oracle::random_positive(rng, 40));
    CHECK(hadamard(f, prestar_kernel(0.0, 40)) == alexander_transform(f));
  }
}

TEST_CASE("catalog coefficients follow the defining recurrences") {
  constexpr std::size_t n = 60;
  const std::pair<StarlikeFunction, std::vector<double>> expected[] = {
      {StarlikeFunction::kIdentity, oracle::rational_series(0, 0, n)},
      {StarlikeFunction::kGeometric, oracle::rational_series(-1, 0, n)},
      {StarlikeFunction::kAlternating, oracle::rational_series(1, 0, n)},
      {StarlikeFunction::kOddGeometric, oracle::rational_series(0, -1, n)},
      {StarlikeFunction::kOddAlternating, oracle::rational_series(0, 1, n)},
      {StarlikeFunction::kKoebe, oracle::squared_denominator(1, n)},
      {StarlikeFunction::kRotatedKoebe, oracle::squared_denominator(-1, n)},
      {StarlikeFunction::kPeriodSix, oracle::rational_series(-1, 1, n)},
      {StarlikeFunction::kPeriodThree, oracle::rational_series(1, 1, n)},
  };
  for (const auto& [id, coeffs] : expected) {
    CAPTURE(starlike_name(id));
    CHECK(as_vector(standard_starlike(id, n)) == coeffs);
  }
}

TEST_CASE("catalog examples and lookup") {
  CHECK(as_vector(standard_starlike("z/(1-z^2)", 5)) == std::vector<double>{1, 0, 1, 0, 1});
  CHECK(as_vector(standard_starlike("z/(1-z)^2", 4)) == std::vector<double>{1, 2, 3, 4});
  CHECK(as_vector(standard_starlike("z/(1 - z + z^2)", 7)) == std::vector<double>{1, 1, 0, -1, -1, 0, 1});
  CHECK(parse_starlike("koebe") == StarlikeFunction::kKoebe);
  CHECK(starlike_catalog().size() == 9);
  for (const auto& e : starlike_catalog()) CHECK(parse_starlike(e.name) == e.id);
  CHECK_THROWS_AS((void)parse_starlike("z/(1-z^3)"), std::invalid_argument);
}

TEST_CASE("coefficient parsing and round trip") {
  CHECK(parse_coefficients("[1, 0.5, 0.25]") == CoefficientSequence{1.0, 0.5, 0.25});
  CHECK(parse_coefficients("k,a_k\n1,1\n2,0.5\n") == CoefficientSequence{1.0, 0.5});
  CHECK(parse_coefficients("1\n0.5\n") == CoefficientSequence{1.0, 0.5});
  CHECK(parse_inline_coefficients("1, 0.5 0.25") == CoefficientSequence{1.0, 0.5, 0.25});
  CHECK_THROWS_AS((void)parse_coefficients("[1, \"x\"]"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_coefficients("k,a_k\n2,1\n"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_inline_coefficients("1, abc"), std::invalid_argument);

  const CoefficientSequence f{1.0, 0.1, 1.0 / 3.0, 2.5e-300};
  CHECK(parse_coefficients(coefficients_to_json(f)) == f);
  CHECK(parse_coefficients(coefficients_to_csv(f)) == f);
  CHECK(std::stod(format_double(0.1)) == 0.1);
  CHECK(format_double(0.1) == "0.1");
}

TEST_CASE("named generators") {
  const auto sq = generate_sequence("inverse-square", 6, {});
  CHECK(as_vector(sq) == std::vector<double>{1, 0.5, 1.0 / 9, 1.0 / 16, 1.0 / 25, 1.0 / 36});
  const auto cube = generate_sequence("inverse-cube", 4, {});
  CHECK(as_vector(cube) == std::vector<double>{1, 0.25, 1.0 / 27, 1.0 / 64});
  const auto log = generate_sequence("log-series", 4, {});
  CHECK(as_vector(log) == std::vector<double>{1, 0.5, 1.0 / 3, 0.25});
  CHECK(generate_sequence("koebe", 3, {}) == CoefficientSequence{1.0, 2.0, 3.0});
  CHECK_THROWS_AS((void)generate_sequence("nope", 3, {}), std::invalid_argument);
}
