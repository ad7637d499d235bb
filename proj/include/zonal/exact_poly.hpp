// Bivariate polynomials in (z, zbar) over the Gaussian rationals.
//
// Exponent pairs map to coefficients; zero coefficients are never stored, so
// equality is plain coefficient comparison.  These carry the Landau-level
// eigenfunctions exactly: every operator identity downstream is checked with
// zero floating-point error.

#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zonal/rational.hpp"

namespace zonal {

class ExactPoly {
 public:
  // (i, j) = exponents of z^i zbar^j.
  using Key = std::pair<int, int>;
  using TermMap = std::map<Key, GaussianRational>;

  ExactPoly() = default;

  static ExactPoly zero() { return {}; }
  static ExactPoly one() { return monomial(0, 0, GaussianRational(Rational(1))); }
  static ExactPoly monomial(int i, int j, GaussianRational c = GaussianRational(Rational(1))) {
    if (i < 0 || j < 0) throw std::invalid_argument("ExactPoly: negative exponent");
    ExactPoly p;
    if (!c.is_zero()) p.terms_[{i, j}] = std::move(c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
  }

  const TermMap& terms() const { return terms_; }

  GaussianRational coefficient(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? GaussianRational() : it->second;
  }

  void add_term(int i, int j, const GaussianRational& c) {
    if (i < 0 || j < 0) throw std::invalid_argument("ExactPoly: negative exponent");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend ExactPoly operator+(const ExactPoly& a, const ExactPoly& b) {
    ExactPoly out = a;
    for (const auto& [k, c] : b.terms_) out.add_term(k.first, k.second, c);
    return out;
  }
  friend ExactPoly operator-(const ExactPoly& a, const ExactPoly& b) {
    ExactPoly out = a;
    for (const auto& [k, c] : b.terms_) out.add_term(k.first, k.second, -c);
    return out;
  }
  friend ExactPoly operator-(const ExactPoly& a) {
    ExactPoly out;
    for (const auto& [k, c] : a.terms_) out.terms_[k] = -c;
    return out;
  }
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
    ExactPoly out;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
  }
  friend ExactPoly operator*(const ExactPoly& a, const GaussianRational& s) {
    ExactPoly out;
    if (s.is_zero()) return out;
    for (const auto& [k, c] : a.terms_) out.terms_[k] = c * s;
    return out;
  }
  friend ExactPoly operator*(const GaussianRational& s, const ExactPoly& a) { return a * s; }
  friend ExactPoly operator*(const ExactPoly& a, const Rational& s) {
    return a * GaussianRational(s);
  }
  friend ExactPoly operator*(const Rational& s, const ExactPoly& a) {
    return a * GaussianRational(s);
  }

  friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ExactPoly& a, const ExactPoly& b) { return !(a == b); }

  // Termwise d/dz: z^i zbar^j -> i z^{i-1} zbar^j.
  ExactPoly d_dz() const {
    ExactPoly out;
    for (const auto& [k, c] : terms_)
      if (k.first > 0) out.add_term(k.first - 1, k.second, c * Rational(k.first));
    return out;
  }

  ExactPoly d_dzbar() const {
    ExactPoly out;
    for (const auto& [k, c] : terms_)
      if (k.second > 0) out.add_term(k.first, k.second - 1, c * Rational(k.second));
    return out;
  }

  // Multiplication by the monomial z^i zbar^j.
  ExactPoly shifted(int i, int j) const {
    ExactPoly out;
    for (const auto& [k, c] : terms_) out.terms_[{k.first + i, k.second + j}] = c;
    return out;
  }

  // Complex conjugate as a function: conj(P)(z, zbar) swaps exponents and
  // conjugates coefficients.
  ExactPoly conjugated() const {
    ExactPoly out;
    for (const auto& [k, c] : terms_) out.terms_[{k.second, k.first}] = c.conj();
    return out;
  }

  std::complex<double> eval(std::complex<double> z) const {
    std::complex<double> zb = std::conj(z);
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [k, c] : terms_) {
      std::complex<double> coeff{to_double(c.re), to_double(c.im)};
      acc += coeff * std::pow(z, k.first) * std::pow(zb, k.second);
    }
    return acc;
  }

  // Real coefficients of r^d along the diagonal z = zbar = r, i.e. the radial
  // profile of a fixed-magnetic-number eigenfunction.  Throws if any
  // coefficient has an imaginary part.
  std::vector<double> radial_profile() const {
    std::vector<double> prof;
    for (const auto& [k, c] : terms_) {
      if (!c.is_real()) throw std::domain_error("radial_profile: complex coefficient");
      size_t d = static_cast<size_t>(k.first + k.second);
      if (prof.size() <= d) prof.resize(d + 1, 0.0);
      prof[d] += to_double(c.re);
    }
    return prof;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + zonal::to_string(c) + ")";
      if (k.first > 0) out += "*z^" + std::to_string(k.first);
      if (k.second > 0) out += "*zb^" + std::to_string(k.second);
    }
    return out;
  }

 private:
  TermMap terms_;
};

inline double eval_radial(const std::vector<double>& profile, double r) {
  double acc = 0.0;
  for (size_t d = profile.size(); d-- > 0;) acc = acc * r + profile[d];
  return acc;
}

}  // namespace zonal
