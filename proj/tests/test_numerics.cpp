// Special functions against classical values (Gamma(1/2) = sqrt(pi),
// psi(1) = -gamma, L_2^{(0)}(2) = -1, ...) and the quadrature engine against
// analytically known Gaussian moments int_0^inf r^n e^{-r^2} dr =
// Gamma((n+1)/2)/2.

#include <doctest.h>

#include <cmath>
#include <random>

#include "zonal/numerics.hpp"
#include "test_oracles.hpp"

using namespace zonal;
using namespace zonal::numerics;

namespace {
constexpr double kEulerGamma = 0.5772156649015328606;
constexpr double kSqrtPi = 1.7724538509055160273;
}  // namespace

TEST_CASE("log_gamma matches classical values") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(log_gamma(0.5) == doctest::Approx(std::log(kSqrtPi)).epsilon(1e-14));
  CHECK(log_gamma(11.0) == doctest::Approx(std::log(3628800.0)).epsilon(1e-14));
  // reference values computed with 30-digit arithmetic
  CHECK(log_gamma(1.5) == doctest::Approx(-0.1207822376352452223).epsilon(1e-13));
  CHECK(log_gamma(123.456) == doctest::Approx(469.6055471299294687).epsilon(1e-13));
  CHECK(log_gamma(1e6) == doctest::Approx(12815504.569147611660).epsilon(1e-13));
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-3.0), std::domain_error);
}

TEST_CASE("digamma matches classical values") {
  CHECK(digamma(1.0) == doctest::Approx(-kEulerGamma).epsilon(1e-13));
  CHECK(digamma(2.0) == doctest::Approx(1.0 - kEulerGamma).epsilon(1e-13));
  CHECK(digamma(0.5) == doctest::Approx(-kEulerGamma - 2.0 * std::log(2.0)).epsilon(1e-13));
  CHECK(digamma(5.5) == doctest::Approx(1.6110931485817511237).epsilon(1e-13));
  CHECK(digamma(123.456) == doctest::Approx(4.8118293238289853873).epsilon(1e-13));
  CHECK(std::fabs(digamma(1e6) - 13.815510057964190771) < 1e-12);
  CHECK_THROWS_AS(digamma(0.0), std::domain_error);
}

TEST_CASE("laguerre recurrence at small orders") {
  CHECK(laguerre(0, 3.7, 42.0) == 1.0);
  CHECK(laguerre(1, 0.0, 0.25) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(laguerre(2, 0.0, 2.0) == doctest::Approx(-1.0).epsilon(1e-14));  // 1 - 2t + t^2/2 at t=2
  CHECK(laguerre(1, 2.0, 1.0) == doctest::Approx(2.0).epsilon(1e-15));   // 1 + alpha - t
}

TEST_CASE("laguerre explicit exact sum equals recurrence") {
  // The explicit sum is evaluated in exact rational arithmetic (the floating
  // sum loses every digit to cancellation around n ~ 60, t ~ 50); double
  // recurrence agrees with the exact value to 1e-12 relative.
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> tnum(0, 400);
  for (int n : {0, 1, 5, 17, 40, 60}) {
    for (int alpha = 0; alpha <= 5; ++alpha) {
      for (int rep = 0; rep < 4; ++rep) {
        Rational t = rational(tnum(rng), 4);  // t in [0, 100]
        Rational exact = laguerre_exact(n, Rational(alpha), t);
        double approx = laguerre(n, alpha, to_double(t));
        double ref = to_double(exact);
        CHECK(std::fabs(approx - ref) <= 1e-12 * std::max(1.0, std::fabs(ref)));
      }
    }
  }
}

TEST_CASE("laguerre exact: recurrence route equals sum route with zero tolerance") {
  // (k+1) L_{k+1} = (2k+1+alpha-t) L_k - (k+alpha) L_{k-1}, run in rationals.
  const Rational alpha(3);
  const Rational t(77, 3);
  Rational lm(1);
  Rational l = Rational(1) + alpha - t;
  for (int k = 1; k < 25; ++k) {
    Rational lnext = ((Rational(2 * k + 1) + alpha - t) * l - (Rational(k) + alpha) * lm) /
                     Rational(k + 1);
    lm = l;
    l = lnext;
  }
  CHECK(l == laguerre_exact(25, alpha, t));
}

TEST_CASE("gamma_ratio_G values and exact twin") {
  CHECK(gamma_ratio_G(0.0).first == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_ratio_G(1.0).first == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(gamma_ratio_G(0.0).second == doctest::Approx(-2.0 * std::log(2.0)).epsilon(1e-13));
  CHECK(gamma_ratio_G(0.5).first == doctest::Approx(2.0 / M_PI).epsilon(1e-13));
  for (unsigned long k = 0; k <= 30; ++k) {
    const double exact = to_double(gamma_ratio_G_exact(k));
    CHECK(std::fabs(gamma_ratio_G(static_cast<double>(k)).first - exact) <= 1e-13 * exact);
  }
  CHECK(gamma_ratio_G_exact(5) == Rational(63, 256));
  CHECK_THROWS_AS(gamma_ratio_G(-0.1), std::domain_error);
}

TEST_CASE("dG matches central finite differences") {
  for (double k : {0.5, 1.0, 5.0, 50.0}) {
    auto g = [](double x) { return gamma_ratio_G(x).first; };
    const double fd = oracle::central_diff(g, k, 1e-5);
    CHECK(std::fabs(gamma_ratio_G(k).second - fd) < 1e-6);
  }
}

TEST_CASE("stirling_S values, derivative, and asymptotics") {
  CHECK(stirling_S(0.0, StirlingVariant::OneOverPi).first == doctest::Approx(kSqrtPi).epsilon(1e-15));
  CHECK(stirling_S(0.0, StirlingVariant::OneThird).first == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK_THROWS_AS(stirling_S(0.0, StirlingVariant::Classic), std::domain_error);
  CHECK_THROWS_AS(stirling_S(-1.0, StirlingVariant::OneOverPi), std::domain_error);

  // 0! approximants: sqrt(pi/3) for c=1/3, exactly 1 for c=1/pi.
  CHECK(stirling_factorial(0.0, StirlingVariant::OneThird) ==
        doctest::Approx(1.0233267079464884885).epsilon(1e-14));
  CHECK(stirling_factorial(0.0, StirlingVariant::OneOverPi) == doctest::Approx(1.0).epsilon(1e-14));

  // S_k sqrt(k) -> 1
  const double s6 = stirling_S(1e6, StirlingVariant::OneOverPi).first;
  CHECK(std::fabs(s6 * 1e3 - 1.0) < 1e-3);

  for (double k : {0.0, 0.1, 1.0, 10.0, 1000.0}) {
    auto s = [](double x) { return stirling_S(x, StirlingVariant::OneOverPi).first; };
    // k = 0 is the domain edge; S'''(0) = 48 pi^{7/2} ~ 2.6e3 forces the
    // small step in the one-sided second-order difference
    const double fd = (k == 0.0) ? oracle::forward_diff2(s, 0.0, 1e-6)
                                 : oracle::central_diff(s, k, 1e-6 * std::max(1.0, k));
    CHECK(std::fabs(stirling_S(k, StirlingVariant::OneOverPi).second - fd) < 1e-8);
  }
}

TEST_CASE("quadrature reproduces Gaussian moments") {
  // int_0^inf e^{-r^2} = sqrt(pi)/2; int_0^inf r^3 e^{-r^2} = 1/2
  auto gauss = [](double r) { return std::exp(-r * r); };
  CHECK(integrate_to_infinity(gauss, 0.0, 1e-12).value ==
        doctest::Approx(kSqrtPi / 2.0).epsilon(1e-12));
  auto r3 = [](double r) { return r * r * r * std::exp(-r * r); };
  CHECK(integrate_to_infinity(r3, 0.0, 1e-12).value == doctest::Approx(0.5).epsilon(1e-12));

  // 20 moments against Gamma((n+1)/2)/2
  for (int n = 0; n < 20; ++n) {
    auto f = [n](double r) {
      const double expo = n * std::log(r) - r * r;
      return (r == 0.0 && n > 0) ? 0.0 : (n == 0 ? std::exp(-r * r) : std::exp(expo));
    };
    const double expected = 0.5 * std::exp(log_gamma((n + 1) / 2.0));
    QuadratureResult res = integrate_to_infinity(f, 0.0, 1e-10 * std::max(1.0, expected));
    CHECK(std::fabs(res.value - expected) <= 1e-10 * std::max(1.0, expected));
  }
}

TEST_CASE("logarithmic Gaussian moment with trapezoid oracle") {
  // int_0^inf r ln(r) e^{-r^2} dr = -gamma/4 (differentiate Gamma(s) under
  // the integral sign); also checked against a brute-force trapezoid.
  auto f = [](double r) { return r == 0.0 ? 0.0 : r * std::log(r) * std::exp(-r * r); };
  const double expected = -kEulerGamma / 4.0;  // -0.14430391622538321
  QuadratureResult res = integrate_to_infinity(f, 0.0, 1e-11);
  CHECK(res.value == doctest::Approx(expected).epsilon(1e-9));
  const double trap = oracle::trapezoid(f, 0.0, 12.0, 400000);
  CHECK(res.value == doctest::Approx(trap).epsilon(1e-8));
}

TEST_CASE("quadrature failure modes") {
  auto nan_mid = [](double x) { return x > 0.49 && x < 0.51 ? std::nan("") : 1.0; };
  CHECK_THROWS_AS(integrate_adaptive(RealIntegrand(nan_mid), 0.0, 1.0, 1e-10),
                  QuadratureError);

  // a kink needs far more than a 3-panel budget at tol 1e-14: the failure
  // carries the best estimate so far
  auto kink = [](double x) { return std::sqrt(std::fabs(x - 1.0 / 3.0)); };
  try {
    integrate_adaptive(RealIntegrand(kink), 0.0, 1.0, 1e-14, 3);
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK(e.best().panels_used == 3);
    CHECK(e.best().abs_error_estimate > 0.0);
    // 2/3 ((1/3)^{3/2} + (2/3)^{3/2}) = 0.4911882...
    CHECK(std::abs(e.best().value.real() - 0.491188) < 1e-3);
  }
}

TEST_CASE("quadrature error estimates hold on the validation grid") {
  for (double width : {0.5, 2.0, 37.0}) {
    auto f = [width](double x) { return std::cos(width * x) * std::exp(-x * x / width); };
    ComplexQuadratureResult res = integrate_adaptive(
        ComplexIntegrand([&](double x) { return std::complex<double>(f(x), 0.0); }), -10.0, 10.0,
        1e-11);
    const double trap = oracle::trapezoid(f, -10.0, 10.0, 2000000);
    CHECK(std::fabs(res.value.real() - trap) < 5e-9);
  }
}
