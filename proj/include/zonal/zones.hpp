// Quantum-number bookkeeping, explicit eigenfunctions in both
// representations, the radial ODE reduction, and zone spectra.
//
// Conventions (2D, orientation +):
//   p, q   holomorphic / antiholomorphic degrees; the zone index a equals q.
//   tau    total quantum number, tau = p + q
//   m      magnetic quantum number, m = p - q
//   l      azimuthal, l = |m|;  n radial, n = min(p, q);  tau = l + 2n.

#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "zonal/exact_poly.hpp"
#include "zonal/model.hpp"
#include "zonal/numerics.hpp"

namespace zonal {

struct QuantumNumbers {
  int p = 0;
  int q = 0;
  int tau = 0;
  int m = 0;
  int l = 0;
  int n = 0;

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

QuantumNumbers qn_from_pq(int p, int q);
// sign_m selects the branch for l > 0 (ignored when l == 0, where m = 0).
QuantumNumbers qn_from_radial(int n, int l, int sign_m);

// Complex Hermite polynomial, lambda-scaled:
//   H_pq = sum_s (-1)^s p! q! / (s! (p-s)! (q-s)!) lambda^{-s} z^{p-s} zbar^{q-s};
// lambda = 1 is the classical table.
ExactPoly ito_poly(int p, int q, const Rational& lambda);

// Radial-times-harmonic form (-1)^n n! L_n^{(l)}(lambda r^2) z^l (zbar^l for
// sign_m < 0), scaled by lambda^{-n} so that it equals ito_poly of the
// converted (p, q) exactly.
ExactPoly laguerre_eigenfunction(int n, int l, int sign_m, const Rational& lambda);

// Univariate exact polynomials in t, coefficient of t^j at index j.
using RadialPoly = std::vector<Rational>;

RadialPoly radial_trim(RadialPoly u);
bool radial_equal(const RadialPoly& a, const RadialPoly& b);
RadialPoly radial_scale(const RadialPoly& u, const Rational& s);

// The reduced ordinary differential operator
//   P u = 4 t u'' + (2k + 4 l~ - 4t) u' - (4 p~ + 3k) u,
// with k = 2 kappa (even, >= 2) and p~ = (m + l~)/2.
RadialPoly radial_ode_apply(const RadialPoly& u, int l_tilde, int p_tilde, int k);

// Laguerre operator Lambda_alpha u = t u'' + (alpha + 1 - t) u'; the reduced
// operator factors as P = 4 Lambda_{k/2 + l~ - 1} - (4 p~ + 3k).
RadialPoly lambda_operator_apply(const RadialPoly& u, const Rational& alpha);

// The unique monic degree-n polynomial eigenfunction of P, obtained by
// solving Lambda_alpha u = -n u with alpha = k/2 + l~ - 1 (coefficients
// c_j = c_{j+1} (j+1)(j+1+alpha) / (j-n) downward from c_n = 1).  Returns the
// polynomial and the P-eigenvalue -(4n + 4 p~ + 3k).
std::pair<RadialPoly, long> radial_eigen_solve(int n, int l_tilde, int p_tilde, int k);

// Box eigenvalue on holomorphic degree p: -((4p + 2 kappa) lambda
// [+ 4 kappa lambda^2 with the field term]).  Independent of q.
Rational box_eigenvalue(int p, const ModelParams& params);

// Flow Hamiltonian H_Z = -(1/2) Box without the field term: h_p = (2p + kappa) lambda.
Rational landau_energy(int p, const ModelParams& params);

struct EigenState {
  QuantumNumbers qn;
  ExactPoly poly;            // lambda-scaled Ito polynomial
  Rational norm_sq;          // <poly e^{-lam r^2/2}, same> as coefficient of pi
  Rational eigenvalue;       // Box eigenvalue at the model's lambda

  // phi(z) = poly(z) e^{-lambda |z|^2 / 2} / sqrt(pi * norm_sq).
  std::complex<double> eval_normalized(std::complex<double> z, const ModelParams& params) const;
};

EigenState make_eigen_state(int p, int q, const ModelParams& params);

struct SpectralLine {
  double energy = 0.0;
  std::int64_t multiplicity = 1;
  int p = 0;
};

// Landau lines h_p = (2p + kappa) lambda for p = 0..p_max with gross-zone
// multiplicity C(a + kappa - 1, a) * C(p + kappa - 1, p).
std::vector<SpectralLine> enumerate_zone_spectrum(int a, const ModelParams& params, int p_max);

// Norm^2 coefficient of pi for the lambda-scaled H_pq; closed form
// p! q! / lambda^{p+q+1}, cross-checked against inner_product in the tests.
Rational ito_norm_sq(int p, int q, const Rational& lambda);

}  // namespace zonal
