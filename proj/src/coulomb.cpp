#include "zonal/coulomb.hpp"

#include <cmath>
#include <stdexcept>

#include "zonal/box_operator.hpp"

namespace zonal {

namespace {

double log_gamma_ratio(long m) {
  // ln[(2m)! / (2^{2m} (m!)^2)]
  const double md = static_cast<double>(m);
  return numerics::log_gamma(2.0 * md + 1.0) - 2.0 * md * std::log(2.0) -
         2.0 * numerics::log_gamma(md + 1.0);
}

double potential_value(Potential potential, double q, double r) {
  switch (potential) {
    case Potential::Coulomb3D:
      return q / r;
    case Potential::Log2D:
      return q * std::log(r);
  }
  throw std::invalid_argument("potential_value: unknown potential");
}

// Upper integration limit for integrands bounded by r^degree e^{-lambda r^2}:
// past the peak at sqrt(degree/(2 lambda)) the log-density falls like
// 2 lambda (r - r_peak)^2, so r_peak + sqrt(60/lambda) leaves a tail below
// e^{-120} of the peak.  Integrating on the explicit bracket keeps the peak
// wide relative to the quadrature nodes (the semi-infinite transform would
// compress it enough to slip between them).
double radial_cutoff(double degree, double lambda) {
  return std::sqrt(std::max(degree, 1.0) / (2.0 * lambda)) + std::sqrt(60.0 / lambda) + 2.0;
}

}  // namespace

double coulomb_diag_fock(int m, const ModelParams& params) {
  if (m < 0) throw std::invalid_argument("coulomb_diag_fock: m must be >= 0");
  params.validate();
  const double lam = params.lambda_d();
  return params.coulomb_strength * std::sqrt(M_PI * lam) * std::exp(log_gamma_ratio(m));
}

Rational coulomb_diag_fock_coeff(int m) {
  if (m < 0) throw std::invalid_argument("coulomb_diag_fock_coeff: m must be >= 0");
  return numerics::gamma_ratio_G_exact(static_cast<unsigned long>(m));
}

std::optional<EigenState> zone_state(int a, int m, const ModelParams& params) {
  if (a < 0) throw std::invalid_argument("zone_state: zone index must be >= 0");
  if (a + m < 0) return std::nullopt;  // H_{(a+m) m} = 0 for a + m < 0
  return make_eigen_state(a + m, a, params);
}

MatrixElement coulomb_matrix_element(const EigenState& s1, const EigenState& s2,
                                     const ModelParams& params, Potential potential, double tol) {
  params.validate();
  if (s1.qn.m != s2.qn.m) return {std::complex<double>{0.0, 0.0}, 0.0};  // selection rule

  const double lam = params.lambda_d();
  const double q = params.coulomb_strength;
  // Unit-normalized radial profiles keep the integrand O(1), so the absolute
  // quadrature tolerance means what it says even at large m.
  std::vector<double> f1 = s1.poly.radial_profile();
  std::vector<double> f2 = s2.poly.radial_profile();
  const double n1 = std::sqrt(M_PI * to_double(s1.norm_sq));
  const double n2 = std::sqrt(M_PI * to_double(s2.norm_sq));
  for (double& c : f1) c /= n1;
  for (double& c : f2) c /= n2;

  // Near r = 0 the 3D-Coulomb integrand is regular: 1/r times the polar
  // Jacobian r is bounded, so no regularization is needed or wanted.
  auto integrand = [&](double r) {
    if (lam * r * r > 1400.0) return 0.0;  // Gaussian underflow dominates any polynomial
    return eval_radial(f1, r) * eval_radial(f2, r) * potential_value(potential, q, r) *
           std::exp(-lam * r * r) * r;
  };
  const double degree = static_cast<double>(f1.size() + f2.size());
  QuadratureResult res = numerics::integrate_adaptive(
      integrand, 0.0, radial_cutoff(degree, lam), tol / (2.0 * M_PI));
  return {std::complex<double>(2.0 * M_PI * res.value, 0.0),
          2.0 * M_PI * res.abs_error_estimate};
}

ZoneOperatorMatrix transmission_matrix(int a, int b, int m_min, int m_max,
                                       const ModelParams& params, Potential potential,
                                       double tol) {
  if (a < 0 || b < 0) throw std::invalid_argument("transmission_matrix: negative zone index");
  if (m_min > m_max) throw std::invalid_argument("transmission_matrix: empty m range");
  ZoneOperatorMatrix out;
  out.a = a;
  out.b = b;
  out.potential = potential;
  for (int m = m_min; m <= m_max; ++m) {
    std::optional<EigenState> from = zone_state(a, m, params);
    std::optional<EigenState> to = zone_state(b, m, params);
    if (!from || !to) continue;
    out.entries[m] = coulomb_matrix_element(*from, *to, params, potential, tol);
  }
  return out;
}

std::optional<double> fluctuation(int a, int b, int m, const ModelParams& params, double tol) {
  std::optional<EigenState> from = zone_state(a, m, params);
  std::optional<EigenState> to = zone_state(b, m, params);
  if (!from || !to) return std::nullopt;
  MatrixElement v = coulomb_matrix_element(*from, *to, params, Potential::Coulomb3D, tol);
  return std::norm(v.value);
}

TraceDivergenceReport trace_divergence_report(int a, long m_max, double epsilon,
                                              const ModelParams& params) {
  if (a != 0)
    throw std::invalid_argument(
        "trace_divergence_report: only the Fock zone (a = 0) has a closed-form spectrum");
  if (m_max < 100) throw std::invalid_argument("trace_divergence_report: m_max must be >= 100");
  if (!(epsilon > 0)) throw std::invalid_argument("trace_divergence_report: epsilon must be > 0");
  params.validate();

  const double lam = params.lambda_d();
  const double e0 = params.coulomb_strength * std::sqrt(M_PI * lam);  // E_0
  const double log_e0 = std::log(e0);

  TraceDivergenceReport rep;
  rep.m_max = m_max;
  rep.epsilon = epsilon;

  long next_checkpoint = 100;
  const long half = m_max / 2;
  double log_ratio = 0.0;  // ln[(2m)!/(4^m (m!)^2)], updated incrementally
  for (long m = 0; m <= m_max; ++m) {
    if (m > 0) log_ratio += std::log((2.0 * m - 1.0) / (2.0 * m));
    const double log_em = log_e0 + log_ratio;
    const double em = std::exp(log_em);
    rep.sum_E += em;
    rep.sum_E2 += em * em;
    const double em2eps = std::exp((2.0 + epsilon) * log_em);
    rep.sum_E2eps += em2eps;
    if (m > half) rep.e2_window += em * em;
    if (m == m_max) rep.tail_increment = em2eps;
    if (m == std::min(5000L, m_max)) rep.stirling_ratio = em * std::sqrt(M_PI * m) / e0;
    if (m == next_checkpoint) {
      rep.checkpoints.push_back({m, rep.sum_E, rep.sum_E2, rep.sum_E2eps});
      next_checkpoint *= 10;
    }
  }
  // Exact-asymptotic partial-sum model: sum_{m<=M} E_m ~ Q sqrt(pi lambda) * 2 sqrt(M/pi).
  const double model = e0 * 2.0 * std::sqrt(static_cast<double>(m_max) / M_PI);
  rep.sum_model_ratio = rep.sum_E / model;
  return rep;
}

std::vector<LogPotentialEntry> log_potential_diag(int m_max, double tol) {
  if (m_max < 1) throw std::invalid_argument("log_potential_diag: m_max must be >= 1");
  std::vector<LogPotentialEntry> out;
  out.reserve(static_cast<size_t>(m_max) + 1);
  for (int m = 0; m <= m_max; ++m) {
    // Denominator int_0^inf r^{2m+1} e^{-r^2} dr = m!/2 sets the scale of the
    // absolute quadrature tolerance.
    const double scale = 0.5 * std::exp(numerics::log_gamma(m + 1.0));
    // log-space evaluation: r^{2m+1} e^{-r^2} spans hundreds of orders of
    // magnitude across the transform's range.
    auto weight = [m](double r) {
      const double expo = (2.0 * m + 1.0) * std::log(r) - r * r;
      return expo < -700.0 ? 0.0 : std::exp(expo);
    };
    auto num = [weight](double r) {
      const double w = weight(r);
      return w == 0.0 ? 0.0 : w * std::log(r);
    };
    auto den = [weight](double r) { return weight(r); };
    const double cutoff = radial_cutoff(2.0 * m + 1.0, 1.0);
    QuadratureResult rn = numerics::integrate_adaptive(num, 0.0, cutoff, tol * scale * 10.0);
    QuadratureResult rd = numerics::integrate_adaptive(den, 0.0, cutoff, tol * scale);
    LogPotentialEntry e;
    e.m = m;
    e.quadrature = rn.value / rd.value;
    e.closed_form = 0.5 * numerics::digamma(m + 1.0);
    out.push_back(e);
  }
  return out;
}

double bethe_velocity(int l, const ModelParams& params) {
  if (l < 1) throw std::invalid_argument("bethe_velocity: l must be >= 1");
  params.validate();
  return std::sqrt(static_cast<double>(l) * params.lambda_d());
}

bool bethe_energy_gap_identity(int m) {
  if (m < 1) throw std::invalid_argument("bethe_energy_gap_identity: m must be >= 1");
  const Rational gm = coulomb_diag_fock_coeff(m);
  const Rational gm1 = coulomb_diag_fock_coeff(m - 1);
  return gm1 - gm == gm / Rational(2 * m - 1);
}

}  // namespace zonal
