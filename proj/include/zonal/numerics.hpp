// Special functions and adaptive quadrature shared by every module.
//
// All functions are pure; quadrature is single-threaded with a fixed
// left-to-right final reduction, so results are bit-reproducible.

#pragma once

#include <complex>
#include <concepts>
#include <functional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

#include "zonal/rational.hpp"

namespace zonal {

// Base class for every computation failure raised by the library.  The CLI
// maps these to exit code 1 with the message as diagnostic.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularTimeError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int panels_used = 0;
};

struct ComplexQuadratureResult {
  std::complex<double> value{0.0, 0.0};
  double abs_error_estimate = 0.0;
  int panels_used = 0;
};

// Thrown when the panel budget is exhausted or the integrand produced a
// non-finite value.  Carries the best estimate obtained so far.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, ComplexQuadratureResult best)
      : Error(what), best_(best) {}
  const ComplexQuadratureResult& best() const { return best_; }

 private:
  ComplexQuadratureResult best_;
};

namespace numerics {

// ln Gamma(x) for x > 0.  Relative error <= 1e-13 on [0.5, 1e6].
double log_gamma(double x);

// psi(x) = d/dx ln Gamma(x) for x > 0.  Absolute error <= 1e-12 on [0.5, 1e6].
double digamma(double x);

// Generalized Laguerre L_n^{(alpha)}(t) by the stable three-term recurrence.
double laguerre(int n, double alpha, double t);

// The explicit sum  L_n^{(alpha)}(t) = sum_i C(n+alpha, n-i) (-t)^i / i!
// in exact rational arithmetic.  (The floating-point version of this sum
// loses all digits to cancellation for large n*t; exact evaluation is the
// usable form of the defining formula.)
Rational laguerre_exact(int n, const Rational& alpha, const Rational& t);

// n! approximants of the family  n! ~ sqrt((2n+c) pi) n^n e^{-n}.
//   Classic  : c = 0     (plain Stirling)
//   OneThird : c = 1/3   (approximates 0! by sqrt(pi/3) ~ 1.02333)
//   OneOverPi: c = 1/pi  (approximates 0! by exactly 1)
enum class StirlingVariant { Classic, OneThird, OneOverPi };

double stirling_constant(StirlingVariant v);

// The factorial approximant itself, sqrt((2n+c) pi) n^n e^{-n}.
double stirling_factorial(double n, StirlingVariant v);

// The eigenvalue-curve surrogate S_k = (4k+c)^{1/2} / (2k+c) and its exact
// derivative dS_k = -4k / ((4k+c)^{1/2} (2k+c)^2).  For c = 1/pi, S_0 =
// sqrt(pi).  Domain error for k < 0; Classic diverges at k = 0.
std::pair<double, double> stirling_S(double k, StirlingVariant v);

// G_k = Gamma(2k+1) / (2^{2k} Gamma^2(k+1)) computed in log space, with
// dG_k = G_k (2 psi(2k+1) - 2 psi(k+1) - 2 ln 2).  Domain error for k < 0.
std::pair<double, double> gamma_ratio_G(double k);

// (2k)! / (2^{2k} (k!)^2) as an exact rational, for integer k.
Rational gamma_ratio_G_exact(unsigned long k);

using RealIntegrand = std::function<double(double)>;
using ComplexIntegrand = std::function<std::complex<double>(double)>;

// Globally adaptive Gauss-Kronrod (G7,K15) on the finite interval [a, b],
// splitting the worst panel until the summed error estimate is <= tol.
QuadratureResult integrate_adaptive(const RealIntegrand& f, double a, double b, double tol,
                                    int max_panels = 4000);
ComplexQuadratureResult integrate_adaptive(const ComplexIntegrand& f, double a, double b,
                                           double tol, int max_panels = 4000);

// Semi-infinite [a, inf) via the rational map k = a + t/(1-t).  Intended for
// integrands with Gaussian or faster-than-1/k^2 decay; anything slower should
// be handled by the caller with an explicit cutoff plus tail bound.
QuadratureResult integrate_to_infinity(const RealIntegrand& f, double a, double tol,
                                       int max_panels = 4000);
ComplexQuadratureResult integrate_to_infinity(const ComplexIntegrand& f, double a, double tol,
                                              int max_panels = 4000);

// [a, b] split into geometrically growing blocks [a, a+1], [a+1, a+2],
// [a+2, a+4], ...  Robust for slowly decaying integrands over huge ranges
// (the Lamb amplitude densities run to cutoffs ~1e8).
ComplexQuadratureResult integrate_blocks(const ComplexIntegrand& f, double a, double b, double tol,
                                         int max_panels_per_block = 4000);
QuadratureResult integrate_blocks(const RealIntegrand& f, double a, double b, double tol,
                                  int max_panels_per_block = 4000);

// Plain callables dispatch on their return type.
template <class F>
concept RealValuedIntegrand =
    std::invocable<F&, double> && std::convertible_to<std::invoke_result_t<F&, double>, double>;
template <class F>
concept ComplexValuedIntegrand =
    std::invocable<F&, double> && !RealValuedIntegrand<F> &&
    std::convertible_to<std::invoke_result_t<F&, double>, std::complex<double>>;

template <RealValuedIntegrand F>
  requires(!std::same_as<std::decay_t<F>, RealIntegrand>)
QuadratureResult integrate_adaptive(F&& f, double a, double b, double tol, int max_panels = 4000) {
  return integrate_adaptive(RealIntegrand(std::forward<F>(f)), a, b, tol, max_panels);
}
template <ComplexValuedIntegrand F>
  requires(!std::same_as<std::decay_t<F>, ComplexIntegrand>)
ComplexQuadratureResult integrate_adaptive(F&& f, double a, double b, double tol,
                                           int max_panels = 4000) {
  return integrate_adaptive(ComplexIntegrand(std::forward<F>(f)), a, b, tol, max_panels);
}
template <RealValuedIntegrand F>
  requires(!std::same_as<std::decay_t<F>, RealIntegrand>)
QuadratureResult integrate_to_infinity(F&& f, double a, double tol, int max_panels = 4000) {
  return integrate_to_infinity(RealIntegrand(std::forward<F>(f)), a, tol, max_panels);
}
template <ComplexValuedIntegrand F>
  requires(!std::same_as<std::decay_t<F>, ComplexIntegrand>)
ComplexQuadratureResult integrate_to_infinity(F&& f, double a, double tol, int max_panels = 4000) {
  return integrate_to_infinity(ComplexIntegrand(std::forward<F>(f)), a, tol, max_panels);
}
template <RealValuedIntegrand F>
  requires(!std::same_as<std::decay_t<F>, RealIntegrand>)
QuadratureResult integrate_blocks(F&& f, double a, double b, double tol,
                                  int max_panels_per_block = 4000) {
  return integrate_blocks(RealIntegrand(std::forward<F>(f)), a, b, tol, max_panels_per_block);
}
template <ComplexValuedIntegrand F>
  requires(!std::same_as<std::decay_t<F>, ComplexIntegrand>)
ComplexQuadratureResult integrate_blocks(F&& f, double a, double b, double tol,
                                         int max_panels_per_block = 4000) {
  return integrate_blocks(ComplexIntegrand(std::forward<F>(f)), a, b, tol, max_panels_per_block);
}

}  // namespace numerics
}  // namespace zonal
