#include "zonal/box_operator.hpp"

#include <stdexcept>

#include "zonal/numerics.hpp"

namespace zonal {

namespace {

void require_2d(const ModelParams& params, const char* who) {
  params.validate();
  if (params.kappa != 1)
    throw std::invalid_argument(std::string(who) + ": kappa must be 1 (2D operator)");
}

}  // namespace

ExactPoly apply_box_conjugated(const ExactPoly& p, const ModelParams& params) {
  require_2d(params, "apply_box_conjugated");
  const Rational& lam = params.lambda;

  ExactPoly mixed = p.d_dz().d_dzbar() * Rational(4);
  ExactPoly drift = (params.orientation == Orientation::Plus)
                        ? p.d_dz().shifted(1, 0)    // z * dP/dz
                        : p.d_dzbar().shifted(0, 1);  // zbar * dP/dzbar
  Rational constant = 2 * lam;
  if (params.include_field_term) constant += 4 * lam * lam;
  return mixed - Rational(4) * lam * drift - constant * p;
}

ExactPoly apply_box_oracle(const ExactPoly& p, const ModelParams& params) {
  require_2d(params, "apply_box_oracle");
  const Rational& lam = params.lambda;
  const Rational half_lam = lam / 2;

  // Twisted derivatives: d_z(P e^{-lam z zbar / 2}) = (tz P) e^{-...}, etc.
  auto tz = [&](const ExactPoly& q) { return q.d_dz() - half_lam * q.shifted(0, 1); };
  auto tzbar = [&](const ExactPoly& q) { return q.d_dzbar() - half_lam * q.shifted(1, 0); };

  ExactPoly laplace = Rational(4) * tz(tzbar(p));

  // D.f = i (z d_z - zbar d_zbar) f; the Box drift term is 2 lam i D. for
  // orientation +, with the sign flipped for orientation -.
  GaussianRational i_unit = GaussianRational::unit_i();
  ExactPoly angular = i_unit * (tz(p).shifted(1, 0) - tzbar(p).shifted(0, 1));
  GaussianRational drift_coeff = i_unit * Rational(2) * lam;
  if (params.orientation == Orientation::Minus) drift_coeff = -drift_coeff;
  ExactPoly drift = drift_coeff * angular;

  ExactPoly potential = -(lam * lam) * p.shifted(1, 1);  // -4 lam^2 * (r^2/4)
  if (params.include_field_term) potential = potential - Rational(4) * lam * lam * p;

  return laplace + drift + potential;
}

Rational gaussian_moment(int i, int j, const Rational& lambda) {
  if (i < 0 || j < 0) throw std::invalid_argument("gaussian_moment: negative exponent");
  if (lambda <= 0) throw std::invalid_argument("gaussian_moment: lambda must be > 0");
  if (i != j) return Rational(0);
  return factorial(static_cast<unsigned long>(i)) / pow_rational(lambda, i + 1);
}

GaussianRational inner_product(const ExactPoly& p, const ExactPoly& r, const Rational& lambda) {
  if (lambda <= 0) throw std::invalid_argument("inner_product: lambda must be > 0");
  GaussianRational total;
  for (const auto& [kp, cp] : p.terms()) {
    for (const auto& [kr, cr] : r.terms()) {
      // P term z^i zbar^j against conj(R) term z^l zbar^k: moment of
      // z^{i+l} zbar^{j+k}.
      const int zi = kp.first + kr.second;
      const int zj = kp.second + kr.first;
      if (zi != zj) continue;
      total += cp * cr.conj() *
               (factorial(static_cast<unsigned long>(zi)) / pow_rational(lambda, zi + 1));
    }
  }
  return total;
}

std::vector<ExactPoly> gram_schmidt_zone(int a, int j_max, const Rational& lambda) {
  if (a < 0 || j_max < 0) throw std::invalid_argument("gram_schmidt_zone: negative index");
  if (lambda <= 0) throw std::invalid_argument("gram_schmidt_zone: lambda must be > 0");

  std::vector<ExactPoly> zone;
  zone.reserve(static_cast<size_t>(j_max) + 1);
  for (int p = 0; p <= j_max; ++p) {
    const int m = p - a;
    // Monomial chain of M_m by increasing antiholomorphic degree q:
    // z^{q+m} zbar^q for q = max(0, -m) .. a.
    std::vector<ExactPoly> ortho;
    ExactPoly current;
    for (int q = std::max(0, -m); q <= a; ++q) {
      ExactPoly v = ExactPoly::monomial(q + m, q);
      for (const ExactPoly& u : ortho) {
        GaussianRational num = inner_product(v, u, lambda);
        GaussianRational den = inner_product(u, u, lambda);
        if (den.is_zero())
          throw Error("gram_schmidt_zone: vanishing pivot (internal invariant violation)");
        v = v - (num / den) * u;
      }
      if (v.is_zero())
        throw Error("gram_schmidt_zone: dependent chain (internal invariant violation)");
      current = v;
      ortho.push_back(std::move(v));
    }
    zone.push_back(std::move(current));
  }
  return zone;
}

}  // namespace zonal
