// Projection kernels (zonal point-spreads), global and zonal Wiener and
// Schroedinger kernels, and partition functions.
//
// Complex coordinates pack kappa planes; z.wbar = sum_i z_i conj(w_i), so
// <X,Y> = Re(z.wbar) and <X,J(Y)> = Im(z.wbar) with J = multiplication by i
// (the orientation-+ complex structure; the sign is pinned by agreement with
// the zone spectral sums).

#pragma once

#include <complex>
#include <vector>

#include "zonal/model.hpp"
#include "zonal/numerics.hpp"
#include "zonal/zones.hpp"

namespace zonal {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;  // kappa components

enum class KernelKind {
  Projection,
  WienerGlobal,
  WienerZonal,
  SchrodingerGlobal,
  SchrodingerZonal,
};

struct KernelValue {
  Complex value{0.0, 0.0};
  KernelKind kind = KernelKind::Projection;
};

enum class FlowKind { Wiener, Schrodinger };

// Zone-a reproducing kernel
//   (lambda/pi)^kappa L_a^{(kappa-1)}(lambda |z-w|^2)
//     exp(lambda (z.wbar - (|z|^2+|w|^2)/2)),
// normalized as the plain orthonormal eigenfunction sum.  (The formal
// expansion is sometimes written with an extra factor 2 in front of the
// kernel; idempotency and the t->0 limit of the zonal flows both force the
// normalization used here.)
KernelValue point_spread(int a, const ModelParams& params, const CVec& z, const CVec& w);
KernelValue point_spread(int a, const ModelParams& params, Complex z, Complex w);

// Truncated sum over the first N orthonormalized zone-a eigenfunctions
// (kappa = 1); converges to point_spread as N grows.
Complex spectral_kernel_oracle(int a, const ModelParams& params, Complex z, Complex w, int N);

// exp(-t H_Z) with H_Z the Landau Hamiltonian (field term omitted):
//   (lambda/(2 pi sinh(lambda t)))^kappa
//     exp(-lambda ((1/2) coth(lambda t) |X-Y|^2 + i <X,J(Y)>)).
// Underflows to zero for huge lambda*t instead of producing NaN.
KernelValue wiener_global(double t, const ModelParams& params, const CVec& x, const CVec& y);
KernelValue wiener_global(double t, const ModelParams& params, Complex x, Complex y);

// exp(-i t H_Z): (lambda/(2 pi i sin(lambda t)))^kappa
//   exp(i lambda ((1/2) cot(lambda t)|X-Y|^2 - <X,J(Y)>)).
// Raises SingularTimeError at the caustics lambda t in pi Z.
KernelValue schrodinger_global(double t, const ModelParams& params, const CVec& x, const CVec& y);
KernelValue schrodinger_global(double t, const ModelParams& params, Complex x, Complex y);

// Zonal flows.  Zone 0 has the closed form
//   (lambda e^{-lambda t} / pi)^kappa
//     exp(lambda (-(|X|^2+|Y|^2)/2 + e^{-2 lambda t} z.wbar))
// (Schroedinger: t -> i t).  Zones a > 0 are evaluated by the eigenfunction
// sum with certified truncation (kappa = 1; the closed Laguerre-type factor is
// not used).  Throws ConvergenceError if the truncation fails to certify.
KernelValue wiener_zonal(int a, double t, const ModelParams& params, Complex z, Complex w);
KernelValue schrodinger_zonal(int a, double t, const ModelParams& params, Complex z, Complex w);

// Tr exp(-t H_Z^{(a)}) closed forms:
//   Wiener:       C(a+kappa-1, a) e^{-kappa lambda t} / (1 - e^{-2 lambda t})^kappa
//   Schroedinger: same with t -> i t (singular at lambda t in pi Z).
Complex partition_zonal(int a, double t, const ModelParams& params, FlowKind kind);

// Spectral sum sum_p mult_p e^{-tau h_p} at complex time tau (Re tau > 0),
// truncated with a certified geometric tail bound.  Equals partition_zonal
// analytically; tau = delta + i t gives the damped Schroedinger comparison.
Complex partition_spectral_sum(int a, Complex tau, const ModelParams& params,
                               double rel_tol = 1e-13);

}  // namespace zonal
