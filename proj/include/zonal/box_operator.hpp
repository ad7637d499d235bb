// Symbolic application of the conjugated Landau-Zeeman operator and the
// weighted Gaussian inner product, all in exact arithmetic.
//
// For the 2D operator (kappa = 1, orientation +)
//
//   Box_lambda = 4 d_z d_zbar - 2 lambda (z d_z - zbar d_zbar)
//                - 4 lambda^2 (1 + (1/4) z zbar)
//
// conjugation by the ground Gaussian exp(-lambda |z|^2 / 2) turns it into a
// polynomial endomorphism: Box(P e^{-u}) = Q e^{-u} with
//
//   Q = 4 P_{z zbar} - 4 lambda z P_z - (2 lambda + 4 lambda^2) P,
//
// the field constant 4 lambda^2 present only when the model keeps the
// magnetic energy-density term.  Orientation - exchanges the roles of z and
// zbar.  apply_box_oracle recomputes the same action by blind operator
// composition (twisted derivatives carrying the Gaussian), giving an
// independent path that must agree term by term.

#pragma once

#include <vector>

#include "zonal/exact_poly.hpp"
#include "zonal/model.hpp"

namespace zonal {

// Product-rule form, derived once by hand (above) and machine-checked against
// apply_box_oracle.  Requires kappa == 1; higher kappa is handled as tensor
// products at the zones level.
ExactPoly apply_box_conjugated(const ExactPoly& p, const ModelParams& params);

// Independent route: track the pair (polynomial, Gaussian) and apply
// Delta = 4 d_z d_zbar, the angular momentum D.f = i (z d_z - zbar d_zbar) f,
// and the potential -4 lambda^2 (1 + r^2/4) literally, then factor the
// Gaussian back out.
ExactPoly apply_box_oracle(const ExactPoly& p, const ModelParams& params);

// integral over C of z^i zbar^j e^{-lambda |z|^2} dA = pi * delta_ij * i! / lambda^{i+1};
// returns the coefficient of pi.
Rational gaussian_moment(int i, int j, const Rational& lambda);

// <P e^{-lambda r^2/2}, R e^{-lambda r^2/2}> in L^2(C), as the coefficient of
// pi.  Conjugate-linear in the second argument.
GaussianRational inner_product(const ExactPoly& p, const ExactPoly& r, const Rational& lambda);

// Gram-Schmidt construction of zone a.  Entry p (0..j_max) is the zone-a
// element of the magnetic subspace M_{p-a}: the monomial chain of M_m,
// ordered by increasing antiholomorphic degree, orthogonalized against its
// predecessors; the output keeps leading coefficient 1 on z^p zbar^a.
std::vector<ExactPoly> gram_schmidt_zone(int a, int j_max, const Rational& lambda);

}  // namespace zonal
