// Exact rational scalars for the eigenfunction algebra.
//
// Rational is GMP's canonical mpq_class (always lowest terms, positive
// denominator).  GaussianRational is Q(i): the coefficient field of the
// complex Hermite (Ito) polynomials.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zonal {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "3/4", "-7", "0".  Used by the CLI for --lambda.
inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("rational_from_string: cannot parse '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

inline Integer factorial_int(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline Rational factorial(unsigned long n) { return Rational(factorial_int(n)); }

inline Integer binomial_int(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

inline Rational binomial(unsigned long n, unsigned long k) {
  return Rational(binomial_int(n, k));
}

// r^e for integer e of either sign (r != 0 when e < 0).
inline Rational pow_rational(const Rational& r, long e) {
  if (e == 0) return Rational(1);
  bool inv = e < 0;
  unsigned long a = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (inv && r == 0) throw std::domain_error("pow_rational: 0^negative");
  Rational base = inv ? Rational(1) / r : r;
  Rational out(1);
  Rational acc = base;
  while (a > 0) {
    if (a & 1UL) out *= acc;
    a >>= 1UL;
    if (a) acc *= acc;
  }
  return out;
}

struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational unit_i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  // |x|^2 = x * conj(x), a nonnegative rational.
  Rational norm() const { return re * re + im * im; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator*(const GaussianRational& a, const Rational& s) {
    return {a.re * s, a.im * s};
  }
  friend GaussianRational operator*(const Rational& s, const GaussianRational& a) { return a * s; }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.norm();
    if (n == 0) throw std::domain_error("GaussianRational: division by zero");
    GaussianRational num = a * b.conj();
    return {num.re / n, num.im / n};
  }
  GaussianRational& operator+=(const GaussianRational& b) {
    re += b.re;
    im += b.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& b) {
    re -= b.re;
    im -= b.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }
};

inline std::string to_string(const GaussianRational& g) {
  if (g.im == 0) return g.re.get_str();
  return g.re.get_str() + (g.im > 0 ? "+" : "") + g.im.get_str() + "i";
}

}  // namespace zonal
