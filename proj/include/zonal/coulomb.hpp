// Zonal Coulomb operators: diagonal Fock-zone spectra (Gamma closed form),
// general matrix elements by radial quadrature, transmission and fluctuation
// operators, trace-divergence diagnostics, the 2D-log-potential comparison,
// and Bethe's velocity matrix elements.
//
// The 3D potential Q/r restricted to the plane is the physical default; the
// 2D potential Q ln r is kept only for the rejection diagnostic.

#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "zonal/model.hpp"
#include "zonal/numerics.hpp"
#include "zonal/zones.hpp"

namespace zonal {

enum class Potential { Coulomb3D, Log2D };

// Fock-zone diagonal eigenvalue on z^m e^{-lambda r^2/2}:
//   E_m = Q sqrt(pi lambda) (2m)! / (2^{2m} (m!)^2),
// computed in log space (no overflow up to m ~ 1e6).
double coulomb_diag_fock(int m, const ModelParams& params);

// The rational coefficient (2m)!/(2^{2m}(m!)^2) of Q sqrt(pi lambda), exact.
Rational coulomb_diag_fock_coeff(int m);

// Zone-a eigenstate of magnetic number m (the Ito polynomial H_{a+m, a});
// empty when a + m < 0, where the intersection H^{(a)} and M_m vanishes.
std::optional<EigenState> zone_state(int a, int m, const ModelParams& params);

struct MatrixElement {
  std::complex<double> value{0.0, 0.0};
  double abs_err = 0.0;
};

// <V phi_1, phi_2> over unit-normalized states.  Analytically zero when the
// magnetic numbers differ (radial potential); otherwise reduced to the 1D
// radial integral 2/sqrt(n1 n2) * int_0^inf f1 f2 V(r) e^{-lambda r^2} r dr.
MatrixElement coulomb_matrix_element(const EigenState& s1, const EigenState& s2,
                                     const ModelParams& params, Potential potential,
                                     double tol = 1e-10);

struct ZoneOperatorMatrix {
  int a = 0;  // source zone
  int b = 0;  // target zone
  Potential potential = Potential::Coulomb3D;
  std::map<int, MatrixElement> entries;  // magnetic number -> value
};

// V^{(a,b)} entries for m in [m_min, m_max]; magnetic subspaces with empty
// zone intersection are omitted.
ZoneOperatorMatrix transmission_matrix(int a, int b, int m_min, int m_max,
                                       const ModelParams& params, Potential potential,
                                       double tol = 1e-10);

// Eigenvalue of F^{(a->b->a)} on the m-state: |V^{(a,b)}_m|^2 (the zone/M_m
// intersections are one-dimensional).  Empty if either transmission is.
std::optional<double> fluctuation(int a, int b, int m, const ModelParams& params,
                                  double tol = 1e-10);

struct DivergenceCheckpoint {
  long m = 0;
  double sum_E = 0.0;
  double sum_E2 = 0.0;
  double sum_E2eps = 0.0;
};

struct TraceDivergenceReport {
  long m_max = 0;
  double epsilon = 0.0;
  double sum_E = 0.0;
  double sum_E2 = 0.0;
  double sum_E2eps = 0.0;
  // E_m sqrt(pi m) / (Q sqrt(pi lambda)) at m = min(5000, m_max): -> 1.
  double stirling_ratio = 0.0;
  // sum_{m<=M} E_m over the exact asymptotic model Q sqrt(pi lambda) 2 sqrt(M/pi).
  double sum_model_ratio = 0.0;
  // sum over (M/2, M] of E_m^2, the harmonic-window increment (~ Q^2 lambda ln 2).
  double e2_window = 0.0;
  // last increment E_M^{2+eps} of the (2+eps)-sum.
  double tail_increment = 0.0;
  std::vector<DivergenceCheckpoint> checkpoints;  // at powers of ten
};

// One pass over the Fock-zone closed-form spectrum (zone a = 0 only: other
// zones have no printed closed form and would need ~m_max quadratures).
TraceDivergenceReport trace_divergence_report(int a, long m_max, double epsilon,
                                              const ModelParams& params);

struct LogPotentialEntry {
  int m = 0;
  double quadrature = 0.0;   // <ln r>_m by radial quadrature
  double closed_form = 0.0;  // psi(m+1)/2
};

// Normalized expectations <ln r>_m of the 2D potential; the sequence grows
// like (ln m)/2 instead of decaying, which is the operative rejection of the
// 2D potential.
std::vector<LogPotentialEntry> log_potential_diag(int m_max, double tol = 1e-11);

// |v_m| = sqrt(l lambda) for the Fock-zone velocity element between levels l
// and l-1.
double bethe_velocity(int l, const ModelParams& params);

// Exact check E_{m-1} - E_m = E_m / (2m - 1) on the rational coefficients.
bool bethe_energy_gap_identity(int m);

}  // namespace zonal
