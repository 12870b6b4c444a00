#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <tuple>

#include "hardy/hardy.hpp"
#include "hardy/laguerre.hpp"
#include "oracles.hpp"

using namespace hardy;

namespace {

std::vector<std::size_t> geometric_grid(std::size_t start, std::size_t stop, double ratio) {
  std::vector<std::size_t> out;
  for (double n = static_cast<double>(start); n <= static_cast<double>(stop); n *= ratio) {
    const auto k = static_cast<std::size_t>(std::llround(n));
    if (out.empty() || out.back() != k) out.push_back(k);
  }
  if (out.back() != stop) out.push_back(stop);
  return out;
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

// Quadrature oracle with the alternative off-diagonal -k(k+1) instead of
// -k(k+1)/2 in A_n, for the negative control.
double misprinted_form(std::span<const double> t) {
  double s = 0.0;
  for (std::size_t k = 1; k <= t.size(); ++k) {
    const double kd = static_cast<double>(k);
    s += (kd * kd - kd + 1.0) * t[k - 1] * t[k - 1];
    if (k + 2 <= t.size()) s += 2.0 * (-kd * (kd + 1.0)) * t[k - 1] * t[k + 1];
  }
  return 0.5 * s;
}

}  // namespace

TEST_CASE("kind names") {
  CHECK(to_string(Kind::discrete) == "discrete");
  CHECK(parse_kind("continuous") == Kind::continuous);
  CHECK_FALSE(parse_kind("both").has_value());
}

TEST_CASE("continuous_constant small cases") {
  // n = 1: F = b x e^{-x/2}, f = b (1 - x/2) e^{-x/2}; int f^2 = b^2/2 and
  // int (F/x)^2 = b^2, so 1/c_1 = 1/2.
  const double symbolic = 1.0 / (0.5 / 1.0);
  const auto c1 = continuous_constant(1);
  CHECK(std::abs(c1.constant - symbolic) <= 1e-12);
  CHECK(c1.m_used == 1);
  CHECK(std::abs(c1.lambda_min - 0.5) <= 1e-12);
  const auto c2 = continuous_constant(2);
  CHECK(std::abs(c2.constant - 2.0) <= 1e-12);
  CHECK(c2.m_used == 1);
  const auto c3 = continuous_constant(3);
  CHECK(c3.m_used == 2);
  CHECK(c3.constant == doctest::Approx(4.0 / (2.0 * (7.0 - std::sqrt(40.0)) / 2.0 + 1.0)).epsilon(1e-12));
  CHECK(c3.constant == doctest::Approx(2.387425887).epsilon(1e-9));
  REQUIRE(c3.thm_lower.has_value());
  CHECK(*c3.thm_lower <= c3.constant);
  CHECK(c3.constant <= *c3.thm_upper);
  CHECK_THROWS_AS(continuous_constant(0), std::invalid_argument);
}

TEST_CASE("discrete_constant small cases") {
  const auto d1 = discrete_constant(1);
  CHECK(d1.constant == 1.0);
  CHECK_FALSE(d1.thm_lower.has_value());
  CHECK_FALSE(d1.thm_upper.has_value());
  const auto d2 = discrete_constant(2);
  CHECK(std::abs(d2.constant - (3.0 + std::sqrt(5.0)) / 4.0) <= 1e-12);
  CHECK_FALSE(d2.thm_lower.has_value());
  const auto d3 = discrete_constant(3);
  CHECK(d3.constant == doctest::Approx(1.0 / oracle::dense_min_eigenvalue(oracle::dense(build_H(3)))).epsilon(1e-12));
  CHECK(d3.m_used == 3);
  REQUIRE(d3.thm_lower.has_value());
  CHECK(hardy_constant(3, Kind::discrete).constant == d3.constant);
}

TEST_CASE("d_2 by brute-force maximization of the quotient") {
  double best = 0.0;
  for (int i = 0; i <= 200000; ++i) {
    const double theta = M_PI * i / 200000.0;
    const std::vector<double> a{std::cos(theta), std::sin(theta)};
    best = std::max(best, discrete_quotient(a));
  }
  CHECK(best == doctest::Approx((3.0 + std::sqrt(5.0)) / 4.0).epsilon(1e-9));
}

TEST_CASE("theorem bound evaluators") {
  const auto c = continuous_bounds(1);
  CHECK(c.lower == doctest::Approx(4.0 * (1.0 - 2.0 / 2.0)));
  CHECK(c.upper == doctest::Approx(4.0 * (1.0 - 8.0 / 16.0)));
  CHECK_FALSE(discrete_bounds(2).has_value());
  const auto d = discrete_bounds(3);
  REQUIRE(d.has_value());
  CHECK(d->lower == doctest::Approx(4.0 * (1.0 - 4.0 / (std::log(3.0) + 4.0))));
  CHECK(d->upper == doctest::Approx(4.0 * (1.0 - 8.0 / std::pow(std::log(3.0) + 4.0, 2))));
}

TEST_CASE("discrete_quotient") {
  CHECK(discrete_quotient(std::vector<double>{1.0}) == 1.0);
  CHECK(discrete_quotient(std::vector<double>{1.0, 1.0}) == 1.0);
  CHECK(discrete_quotient(std::vector<double>{1.0, -1.0}) == doctest::Approx(0.5));
  CHECK_THROWS_AS(discrete_quotient(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(discrete_quotient(std::vector<double>{0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("sqrt test sequence and harmonic bound") {
  CHECK(sqrt_test_sequence(1).values == std::vector{1.0});
  CHECK(harmonic_lower_bound(1) == doctest::Approx(0.8));
  CHECK(harmonic_lower_bound(3) == doctest::Approx(4.0 - 96.0 / 35.0));
  for (std::size_t n : {1U, 2U, 3U, 10U, 1000U, 100000U}) {
    const auto a = sqrt_test_sequence(n);
    // Prefix sums telescope to sqrt(k), so the numerator is H_n.
    double sum_sq = 0.0;
    for (double x : a.values) sum_sq += x * x;
    const double q = discrete_quotient(a);
    CHECK(q * sum_sq == doctest::Approx(harmonic_number(n)).epsilon(1e-12));
    CHECK(q > harmonic_lower_bound(n));
    if (n <= 1000) CHECK(q <= discrete_constant(n).constant + 1e-9);
  }
}

TEST_CASE("Laguerre values") {
  for (double x : {0.0, 0.5, 3.0, 17.0}) CHECK(laguerre_eval(0, 0.0, x) == 1.0);
  for (std::size_t n = 0; n <= 50; ++n) CHECK(laguerre_eval(n, 0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(laguerre_eval(2, 0.0, 2.0) == doctest::Approx(-1.0).epsilon(1e-14));
  // L_n^{(alpha)}(0) = binom(n + alpha, n).
  CHECK(laguerre_eval(3, 1.0, 0.0) == doctest::Approx(4.0));
  CHECK(laguerre_eval(4, 2.5, 0.0) == doctest::Approx(6.5 * 5.5 * 4.5 * 3.5 / 24.0));
  CHECK_THROWS_AS(laguerre_eval(2, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("Laguerre identities at sample points") {
  std::mt19937_64 rng(314159);
  std::uniform_real_distribution<double> xs(0.01, 40.0);
  for (int s = 0; s < 20; ++s) {
    const double x = xs(rng);
    CAPTURE(x);
    for (double alpha : {0.0, 0.5, 2.0}) {
      const auto lo = laguerre_table(30, alpha, x);
      const auto hi = laguerre_table(30, alpha + 1.0, x);
      double partial = 0.0;
      double scale = 0.0;
      for (std::size_t k = 0; k <= 30; ++k) {
        partial += lo[k];
        scale += std::abs(lo[k]);
        // (ii) summation
        CHECK(std::abs(hi[k] - partial) <= 1e-10 * std::max(1.0, scale));
        // (iii) difference
        if (k > 0) CHECK(std::abs(lo[k] - (hi[k] - hi[k - 1])) <= 1e-10 * std::max({1.0, std::abs(hi[k]), std::abs(hi[k - 1])}));
      }
      // (iv) derivative, by central differences and in both stated forms
      for (std::size_t k = 1; k <= 30; ++k) {
        const double h = 1e-3;
        auto l = [&](double dx) { return laguerre_eval(k, alpha, x + dx); };
        const double fd = (l(-2 * h) - 8 * l(-h) + 8 * l(h) - l(2 * h)) / (12.0 * h);
        const double mag = std::max({1.0, std::abs(hi[k - 1]), std::abs(lo[k])});
        CHECK(std::abs(fd + hi[k - 1]) <= 1e-6 * mag);
        const double alt = (static_cast<double>(k) * lo[k] - (static_cast<double>(k) + alpha) * lo[k - 1]) / x;
        CHECK(std::abs(alt + hi[k - 1]) <= 1e-8 * std::max(mag, std::abs(lo[k]) / x));
      }
    }
    const auto jet = laguerre_jet(30, x);
    for (std::size_t k = 1; k <= 30; ++k) {
      CHECK(jet.derivative[k] == doctest::Approx(-laguerre_eval(k - 1, 1.0, x)).epsilon(1e-10).scale(1.0));
    }
  }
}

TEST_CASE("Gauss-Laguerre rule") {
  CHECK_THROWS_AS(gauss_laguerre(0), QuadratureError);
  CHECK_THROWS_AS(gauss_laguerre(101), QuadratureError);
  const auto one = gauss_laguerre(1);
  CHECK(one.nodes[0] == doctest::Approx(1.0));
  CHECK(one.weights[0] == doctest::Approx(1.0));
  // int x^j e^{-x} = j!, exact for j <= 2N - 1.
  for (std::size_t npts : {2U, 5U, 10U, 14U}) {
    const auto rule = gauss_laguerre(npts);
    double fact = 1.0;
    for (std::size_t j = 0; j < 2 * npts; ++j) {
      if (j > 0) fact *= static_cast<double>(j);
      double s = 0.0;
      for (std::size_t i = 0; i < npts; ++i) s += rule.weights[i] * std::pow(rule.nodes[i], static_cast<double>(j));
      CHECK(s == doctest::Approx(fact).epsilon(1e-10));
    }
  }
  // (v) orthonormality of L_n under e^{-x}
  const auto rule = gauss_laguerre(25);
  for (std::size_t n = 0; n <= 20; ++n) {
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * std::pow(laguerre_eval(n, 0.0, rule.nodes[i]), 2);
    CHECK(s == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("CoefficientVector round trip") {
  const auto v = CoefficientVector::from_b({0.0, 1.0});
  CHECK(std::vector<double>(v.t().begin(), v.t().end()) == std::vector{1.0, 1.0});
  std::mt19937_64 rng(99);
  for (std::size_t n : {1U, 2U, 7U, 50U}) {
    const auto b = oracle::random_vector(rng, n);
    const auto fwd = CoefficientVector::from_b(b);
    const auto back = CoefficientVector::from_t(std::vector<double>(fwd.t().begin(), fwd.t().end()));
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(back.b()[k] - b[k]) <= 1e-14 * std::max(1.0, std::abs(b[k])) * n);
  }
  CHECK_THROWS_AS(CoefficientVector::from_b({}), std::invalid_argument);
}

TEST_CASE("quadratic_forms examples") {
  const auto q1 = quadratic_forms(CoefficientVector::from_b({1.0}));
  CHECK(q1.integral_f_sq == doctest::Approx(0.5));
  CHECK(q1.integral_mean_sq == doctest::Approx(1.0));
  const auto q2 = quadratic_forms(CoefficientVector::from_b({0.0, 1.0}));
  CHECK(q2.integral_f_sq == doctest::Approx(2.0));
  CHECK(q2.integral_mean_sq == doctest::Approx(2.0));

  const auto o1 = quadrature_oracle(CoefficientVector::from_b({1.0}), 4);
  CHECK(std::abs(o1.integral_f_sq - 0.5) <= 1e-10);
  CHECK(std::abs(o1.integral_mean_sq - 1.0) <= 1e-10);
  const auto o2 = quadrature_oracle(CoefficientVector::from_b({0.0, 1.0}), 6);
  CHECK(rel_diff(o2.integral_f_sq, q2.integral_f_sq) <= 1e-8);
  CHECK(rel_diff(o2.integral_mean_sq, q2.integral_mean_sq) <= 1e-8);

  CHECK_THROWS_AS(quadrature_oracle(CoefficientVector::from_b(std::vector<double>(13, 1.0)), 20), std::invalid_argument);
  CHECK_THROWS_AS(quadrature_oracle(CoefficientVector::from_b({1.0, 1.0}), 2), std::invalid_argument);
}

TEST_CASE("closed-form quadratic forms match the quadrature oracle") {
  std::mt19937_64 rng(2718);
  for (std::size_t n = 1; n <= kQuadratureMaxSize; ++n) {
    CAPTURE(n);
    for (int trial = 0; trial < 100; ++trial) {
      const auto coeffs = CoefficientVector::from_b(oracle::random_vector(rng, n));
      const auto closed = quadratic_forms(coeffs);
      const auto quad = quadrature_oracle(coeffs, n + 2);
      CHECK(rel_diff(closed.integral_f_sq, quad.integral_f_sq) <= 1e-8);
      CHECK(rel_diff(closed.integral_mean_sq, quad.integral_mean_sq) <= 1e-8);
    }
  }
}

TEST_CASE("negative control: off-diagonal -k(k+1) disagrees with the quadrature oracle") {
  std::mt19937_64 rng(1618);
  int disagreements = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto coeffs = CoefficientVector::from_b(oracle::random_vector(rng, 6));
    const auto quad = quadrature_oracle(coeffs, 8);
    if (rel_diff(misprinted_form(coeffs.t()), quad.integral_f_sq) > 1e-3) ++disagreements;
  }
  CHECK(disagreements == 50);
}

TEST_CASE("extremal sequences attain d_n") {
  const auto a1 = extremal_sequence(1);
  CHECK(std::abs(std::abs(a1.values[0]) - 1.0) <= 1e-14);
  CHECK(discrete_quotient(a1) == doctest::Approx(1.0));
  for (std::size_t n : {2U, 5U, 10U, 100U, 1000U}) {
    CAPTURE(n);
    const double d = discrete_constant(n).constant;
    CHECK(std::abs(discrete_quotient(extremal_sequence(n)) - d) <= 1e-8);
  }
  CHECK(std::abs(discrete_quotient(extremal_sequence(2)) - (3.0 + std::sqrt(5.0)) / 4.0) <= 1e-12);
}

TEST_CASE("extremal coefficients attain 1/c_n") {
  for (std::size_t n : {1U, 2U, 3U, 4U, 7U, 12U, 50U, 301U}) {
    CAPTURE(n);
    const auto coeffs = extremal_coefficients(n);
    const auto t = coeffs.t();
    for (std::size_t k = 1; k < n; k += 2) CHECK(t[k] == 0.0);
    const double half_lambda = 0.5 * smallest_eigenvalue_A(n).lambda_min;
    CHECK(std::abs(quadratic_forms(coeffs).ratio() - half_lambda) <= 1e-10);
    CHECK(std::abs(1.0 / continuous_constant(n).constant - half_lambda) <= 1e-10);
    if (n <= kQuadratureMaxSize) {
      CHECK(quadrature_oracle(coeffs, n + 2).ratio() == doctest::Approx(half_lambda).epsilon(1e-8));
    }
  }
  const double b2 = smallest_eigenvalue(build_B(2)).lambda_min;
  CHECK(std::abs(quadratic_forms(extremal_coefficients(3)).ratio() - 0.5 * b2) <= 1e-10);
}

TEST_CASE("constants are nondecreasing and below 4") {
  double prev_c = 0.0, prev_d = 0.0;
  for (std::size_t n = 1; n <= 400; ++n) {
    const double c = continuous_constant(n).constant;
    const double d = discrete_constant(n).constant;
    CHECK(c >= prev_c);
    CHECK(d > prev_d);
    CHECK(c < 4.0);
    CHECK(d < 4.0);
    prev_c = c;
    prev_d = d;
  }
  for (std::size_t n : geometric_grid(400, 100000, 2.0)) {
    const double c = continuous_constant(n).constant;
    const double d = discrete_constant(n).constant;
    CHECK(c >= prev_c);
    CHECK(d >= prev_d);
    CHECK(c < 4.0);
    CHECK(d < 4.0);
    prev_c = c;
    prev_d = d;
  }
}

TEST_CASE("theorem sandwiches on a geometric grid") {
  for (std::size_t n : geometric_grid(1, 100000, 1.25)) {
    CAPTURE(n);
    const auto c = continuous_constant(n);
    // At n = 1 the upper bound is attained: c_1 = 2 = 4(1 - 8/16).
    CHECK(*c.thm_lower <= c.constant);
    CHECK(c.constant <= *c.thm_upper + 1e-12);
    if (n >= 3) {
      const auto d = discrete_constant(n);
      CHECK(*d.thm_lower <= d.constant);
      CHECK(d.constant <= *d.thm_upper);
    }
  }
}

TEST_CASE("random sequences never beat d_n") {
  std::mt19937_64 rng(4242);
  for (std::size_t n : {1U, 2U, 3U, 8U, 40U, 300U}) {
    const double d = discrete_constant(n).constant;
    for (int trial = 0; trial < 200; ++trial) {
      CHECK(discrete_quotient(oracle::random_vector(rng, n)) <= d + 1e-9);
    }
  }
}

TEST_CASE("relation chain 1/c_n = lambda(A_n)/2 = lambda(B_m)/2 = (1 + 2 lambda(D_m))/4") {
  for (std::size_t n : geometric_grid(1, 20000, 1.5)) {
    CAPTURE(n);
    const std::size_t m = (n + 1) / 2;
    const double inv_c = 1.0 / continuous_constant(n).constant;
    const double a = 0.5 * smallest_eigenvalue_A(n).lambda_min;
    const double b = 0.5 * smallest_eigenvalue(build_B(m)).lambda_min;
    const double d = 0.25 * (1.0 + 2.0 * smallest_eigenvalue(build_D(m)).lambda_min);
    CHECK(std::abs(inv_c - a) <= 1e-10);
    CHECK(std::abs(a - b) <= 1e-10);
    CHECK(std::abs(b - d) <= 1e-10);
  }
}
