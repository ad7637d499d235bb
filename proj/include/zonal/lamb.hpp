// The interaction-amplitude hypothesis: amplitude densities over the
// Fock-zone Coulomb spectrum, the sigma integrals with their closed-form
// targets, and the resulting level shift in physical units.
//
// Everything here is dimensionless (lambda = Q = 1) until lamb_shift applies
// (1/4) alpha^5 m_e c^2.

#pragma once

#include <complex>
#include <utility>

#include "zonal/numerics.hpp"

namespace zonal {
namespace lamb {

// 2002-era CODATA values matching the sources the constants table derives
// from, plus derived combinations.  paper_printed holds the constants as
// printed in the source derivation for cross-assertion.
struct PhysicalConstants {
  double alpha = 7.297352568e-3;     // fine-structure constant
  double c = 299792458.0;            // m/s
  double me_kg = 9.10938188e-31;     // electron mass
  double e_charge = 1.60217653e-19;  // C
  double h = 6.6260693e-34;          // J s
  double hbar = 1.05457168e-34;      // J s
  double mu_bohr = 9.27400949e-24;   // J/T

  double me_c2_J() const { return me_kg * c * c; }
  double me_c2_eV() const { return me_c2_J() / e_charge; }
  double aleph() const { return std::pow(0.25 * std::pow(alpha, 5), 1.0 / 6.0); }
  double hbar2_over_2me() const { return hbar * hbar / (2.0 * me_kg); }
  double two_lambda_phys() const { return mu_bohr / hbar2_over_2me(); }
  double w_extra() const { return mu_bohr * two_lambda_phys(); }
};

struct PaperPrintedConstants {
  double alpha = 7.297352568e-3;
  double mu_bohr = 9.27400949e-24;
  double hbar2_over_2me = 6.1042635e-39;       // kg m^2
  double w_extra = 1.408970181e-8;             // kg s^-2 T^-2
  double two_lambda_phys = 1.492298399e15;     // m^-2 T^-1; inconsistent with
                                               // mu_B/(hbar^2/2me), kept as printed
};

inline const PhysicalConstants& default_constants() {
  static const PhysicalConstants c{};
  return c;
}

// Dimensionless energy levels of the free electron and of the constant field:
// epsilon_p = 4l + 2, epsilon_B = 4 (lambda = 1, Fock zone: p = l).
std::pair<double, double> dimensionless_energies(int l);

enum class DensityKind { ExactGamma, Stirling };
enum class EpsilonKind { EpsilonP, EpsilonB };

struct AmplitudeResult {
  std::complex<double> sigma{0.0, 0.0};
  double abs_err = 0.0;
  EpsilonKind epsilon_kind = EpsilonKind::EpsilonP;
  DensityKind density_kind = DensityKind::Stirling;
  int zone = 0;
  int l = 0;
};

// sigma = int_0^inf E_k d(exp(-(1/2) sqrt(pi) eps E_k i))
//       = int_0^inf E_k (-(1/2) sqrt(pi) eps E'_k i) exp(...) dk
// with E_k = sqrt(pi) G_k (ExactGamma) or E_k = S_k with c = 1/pi (Stirling;
// the phase (1/2) eps sqrt(pi) S_k is the sqrt(pi)(2l+1) S_k form for
// eps = 4l+2).  The k-integral runs to a cutoff K at which the analytic
// envelope bound on the tail, (beta/2) E_K^2, is below tol/2; abs_err is the
// quadrature estimate plus that bound.  cutoff_scale multiplies K (stability
// probes double it).
AmplitudeResult sigma_integral(double epsilon, DensityKind density, double tol,
                               double cutoff_scale = 1.0);

AmplitudeResult sigma_p(int l, DensityKind density, double tol, double cutoff_scale = 1.0);
AmplitudeResult sigma_B(DensityKind density, double tol, double cutoff_scale = 1.0);

// Closed forms from the Stirling evaluation chain:
//   sigma_l = sqrt(pi) - i / (sqrt(pi)(l + 1/2)),  sigma_B = -sqrt(pi),
//   sigma_total = -i / (sqrt(pi)(l + 1/2)).
std::complex<double> sigma_closed_form(int l);
std::complex<double> sigma_B_closed_form();
std::complex<double> sigma_total_closed_form(int l);

enum class ShiftMode { EpsilonP, Total };

struct LambShift {
  double dimensionless = 0.0;   // (1/4) sigma sigmabar
  double energy_eV = 0.0;
  double frequency_MHz = 0.0;
};

// EpsilonP: Delta = (1/4) alpha^5 me c^2 (pi + 1/(pi (l+1/2)^2));
// Total:    Delta = alpha^5 me c^2 / (4 pi (l+1/2)^2).
LambShift lamb_shift(int l, ShiftMode mode,
                     const PhysicalConstants& constants = default_constants());

struct DiscreteVsIntegral {
  std::complex<double> discrete_sum{0.0, 0.0};
  std::complex<double> integral{0.0, 0.0};
  double gap = 0.0;
};

// Left-point Stieltjes sum sum_{k=0}^{K} E_k (phase(k+1) - phase(k)) against
// the integral over [0, K+1] (Stirling density).  The unit-step sum carries a
// fixed O(1) error from the rapid phase variation near k = 0; the gap
// decreases in K but converges to ~0.32 |sigma|, which is what the report
// shows.
DiscreteVsIntegral discrete_vs_integral(int l, int K, double tol = 1e-9);

// Scalar density: the same integral with the real decay exp(-(1/2) sqrt(pi)
// eps E_k) in place of the unitary phase.
AmplitudeResult scalar_density_sigma(int l, DensityKind density, double tol);

// 1/(pi (l+1/2)^2) = 1/(2 pi (l+1)(l+1/2)^2) + 1/(pi (l+1)(l+1/2));
// first_term's supremum over l >= 1 is 1/(9 pi) = 0.0353677...
struct PartialFraction {
  double lhs = 0.0;
  double first_term = 0.0;
  double second_term = 0.0;
};
PartialFraction lamb_partial_fraction(int l);

}  // namespace lamb
}  // namespace zonal
