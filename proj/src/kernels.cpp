#include "zonal/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "zonal/box_operator.hpp"

namespace zonal {

namespace {

constexpr double kSingularTol = 1e-12;

void check_dims(const ModelParams& params, const CVec& z, const CVec& w, const char* who) {
  params.validate();
  if (static_cast<int>(z.size()) != params.kappa || static_cast<int>(w.size()) != params.kappa)
    throw std::invalid_argument(std::string(who) + ": point dimension must equal kappa");
}

double norm_sq(const CVec& z) {
  double s = 0.0;
  for (const Complex& zi : z) s += std::norm(zi);
  return s;
}

Complex dot_conj(const CVec& z, const CVec& w) {
  Complex s{0.0, 0.0};
  for (size_t i = 0; i < z.size(); ++i) s += z[i] * std::conj(w[i]);
  return s;
}

double dist_sq(const CVec& z, const CVec& w) {
  double s = 0.0;
  for (size_t i = 0; i < z.size(); ++i) s += std::norm(z[i] - w[i]);
  return s;
}

// Eigenfunction sum over p for the zonal flows; phase(p) supplies the flow
// factor.  Terms decay superexponentially through the 1/sqrt(p!) norms once
// p passes lambda |z| |w|, so that index must sit well inside the budget.
template <class Phase>
Complex zonal_spectral_sum(int a, const ModelParams& params, Complex z, Complex w, Phase phase,
                           const char* who) {
  constexpr int kBudget = 450;
  const double lam = params.lambda_d();
  const double gauss = std::exp(-0.5 * lam * (std::norm(z) + std::norm(w)));
  // terms peak near p = lambda |z||w| and need ~9 sqrt(peak) more indices to
  // decay out; past that the budget cannot certify the truncation
  const double peak = lam * std::abs(z) * std::abs(w);
  if (gauss == 0.0 || peak + 9.0 * std::sqrt(peak + 1.0) > kBudget)
    throw ConvergenceError(std::string(who) +
                           ": arguments too large to certify the eigenfunction-sum truncation");
  const double log_lam = std::log(lam);
  Complex sum{0.0, 0.0};
  int small_streak = 0;
  for (int p = 0; p <= kBudget; ++p) {
    const ExactPoly h = ito_poly(p, a, params.lambda);
    // log-space norm: p! overflows double near p = 171 while the normalized
    // eigenfunction values stay bounded by the kernel diagonal
    const double log_root_n =
        0.5 * (std::log(M_PI) + numerics::log_gamma(p + 1.0) + numerics::log_gamma(a + 1.0) -
               (p + a + 1) * log_lam);
    const Complex t1 = h.eval(z) * std::exp(-0.5 * lam * std::norm(z) - log_root_n);
    const Complex t2 = h.eval(w) * std::exp(-0.5 * lam * std::norm(w) - log_root_n);
    const Complex term = phase(p) * t1 * std::conj(t2);
    if (!std::isfinite(term.real()) || !std::isfinite(term.imag()))
      throw ConvergenceError(std::string(who) + ": non-finite term in the eigenfunction sum");
    sum += term;
    const double mag = std::abs(term);
    if (mag < 1e-16 * (1.0 + std::abs(sum)))
      ++small_streak;
    else
      small_streak = 0;
    if (small_streak >= 4 && p > a + 4 && p > static_cast<int>(peak)) return sum;
  }
  throw ConvergenceError(std::string(who) + ": eigenfunction sum failed to certify truncation");
}

}  // namespace

KernelValue point_spread(int a, const ModelParams& params, const CVec& z, const CVec& w) {
  check_dims(params, z, w, "point_spread");
  if (a < 0) throw std::invalid_argument("point_spread: zone index must be >= 0");
  const double lam = params.lambda_d();
  const int kap = params.kappa;
  const double pref = std::pow(lam / M_PI, kap);
  const double lag = numerics::laguerre(a, kap - 1, lam * dist_sq(z, w));
  const Complex expo = lam * (dot_conj(z, w) - 0.5 * (norm_sq(z) + norm_sq(w)));
  return {pref * lag * std::exp(expo), KernelKind::Projection};
}

KernelValue point_spread(int a, const ModelParams& params, Complex z, Complex w) {
  return point_spread(a, params, CVec{z}, CVec{w});
}

Complex spectral_kernel_oracle(int a, const ModelParams& params, Complex z, Complex w, int N) {
  params.validate();
  if (params.kappa != 1)
    throw std::invalid_argument("spectral_kernel_oracle: kappa must be 1");
  if (a < 0 || N < 1) throw std::invalid_argument("spectral_kernel_oracle: bad zone or order");
  const double lam = params.lambda_d();
  const double gauss = std::exp(-0.5 * lam * (std::norm(z) + std::norm(w)));
  Complex sum{0.0, 0.0};
  for (int p = 0; p < N; ++p) {
    const ExactPoly h = ito_poly(p, a, params.lambda);
    const double n2 = M_PI * to_double(ito_norm_sq(p, a, params.lambda));
    sum += h.eval(z) * std::conj(h.eval(w)) / n2;
  }
  return sum * gauss;
}

KernelValue wiener_global(double t, const ModelParams& params, const CVec& x, const CVec& y) {
  check_dims(params, x, y, "wiener_global");
  if (!(t > 0)) throw std::invalid_argument("wiener_global: t must be > 0");
  const double lam = params.lambda_d();
  const double sh = std::sinh(lam * t);
  if (!std::isfinite(sh)) return {Complex{0.0, 0.0}, KernelKind::WienerGlobal};  // underflow
  const double pref = std::pow(lam / (2.0 * M_PI * sh), params.kappa);
  const double coth = std::cosh(lam * t) / sh;
  const Complex expo =
      -lam * Complex(0.5 * coth * dist_sq(x, y), dot_conj(x, y).imag());
  Complex v = pref * std::exp(expo);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) v = Complex{0.0, 0.0};
  return {v, KernelKind::WienerGlobal};
}

KernelValue wiener_global(double t, const ModelParams& params, Complex x, Complex y) {
  return wiener_global(t, params, CVec{x}, CVec{y});
}

KernelValue schrodinger_global(double t, const ModelParams& params, const CVec& x, const CVec& y) {
  check_dims(params, x, y, "schrodinger_global");
  if (!(t > 0)) throw std::invalid_argument("schrodinger_global: t must be > 0");
  const double lam = params.lambda_d();
  const double sn = std::sin(lam * t);
  if (std::fabs(sn) < kSingularTol)
    throw SingularTimeError("schrodinger_global: caustic at lambda*t in pi*Z");
  const Complex pref = std::pow(Complex(0.0, 2.0 * M_PI * sn / lam), -params.kappa);
  const double cot = std::cos(lam * t) / sn;
  const Complex expo =
      Complex(0.0, lam) * (0.5 * cot * dist_sq(x, y) - dot_conj(x, y).imag());
  return {pref * std::exp(expo), KernelKind::SchrodingerGlobal};
}

KernelValue schrodinger_global(double t, const ModelParams& params, Complex x, Complex y) {
  return schrodinger_global(t, params, CVec{x}, CVec{y});
}

KernelValue wiener_zonal(int a, double t, const ModelParams& params, Complex z, Complex w) {
  params.validate();
  if (a < 0) throw std::invalid_argument("wiener_zonal: zone index must be >= 0");
  if (!(t > 0)) throw std::invalid_argument("wiener_zonal: t must be > 0");
  const double lam = params.lambda_d();
  if (a == 0) {
    const double pref = std::pow(lam * std::exp(-lam * t) / M_PI, params.kappa);
    const Complex expo =
        lam * (-0.5 * (std::norm(z) + std::norm(w)) + std::exp(-2.0 * lam * t) * z * std::conj(w));
    return {pref * std::exp(expo), KernelKind::WienerZonal};
  }
  if (params.kappa != 1)
    throw std::invalid_argument("wiener_zonal: spectral-sum path requires kappa = 1 for a > 0");
  const int kap = params.kappa;
  auto phase = [lam, t, kap](int p) { return Complex(std::exp(-t * (2 * p + kap) * lam), 0.0); };
  return {zonal_spectral_sum(a, params, z, w, phase, "wiener_zonal"), KernelKind::WienerZonal};
}

KernelValue schrodinger_zonal(int a, double t, const ModelParams& params, Complex z, Complex w) {
  params.validate();
  if (a < 0) throw std::invalid_argument("schrodinger_zonal: zone index must be >= 0");
  const double lam = params.lambda_d();
  if (a == 0) {
    const Complex it{0.0, t};
    const Complex pref = std::pow(lam * std::exp(-lam * it) / M_PI, params.kappa);
    const Complex expo =
        lam * (-0.5 * (std::norm(z) + std::norm(w)) +
               std::exp(-2.0 * lam * it) * z * std::conj(w));
    return {pref * std::exp(expo), KernelKind::SchrodingerZonal};
  }
  if (params.kappa != 1)
    throw std::invalid_argument("schrodinger_zonal: spectral-sum path requires kappa = 1 for a > 0");
  const int kap = params.kappa;
  auto phase = [lam, t, kap](int p) {
    return std::exp(Complex(0.0, -t * (2 * p + kap) * lam));
  };
  return {zonal_spectral_sum(a, params, z, w, phase, "schrodinger_zonal"),
          KernelKind::SchrodingerZonal};
}

Complex partition_zonal(int a, double t, const ModelParams& params, FlowKind kind) {
  params.validate();
  if (a < 0) throw std::invalid_argument("partition_zonal: zone index must be >= 0");
  if (!(t > 0)) throw std::invalid_argument("partition_zonal: t must be > 0");
  const double lam = params.lambda_d();
  const int kap = params.kappa;
  const double binom = to_double(binomial(static_cast<unsigned long>(a + kap - 1),
                                          static_cast<unsigned long>(a)));
  if (kind == FlowKind::Wiener) {
    const double den = 1.0 - std::exp(-2.0 * lam * t);
    return binom * std::exp(-kap * lam * t) / std::pow(den, kap);
  }
  if (std::fabs(std::sin(lam * t)) < kSingularTol)
    throw SingularTimeError("partition_zonal: Schrodinger partition singular at lambda*t in pi*Z");
  const Complex den = 1.0 - std::exp(Complex(0.0, -2.0 * lam * t));
  return binom * std::exp(Complex(0.0, -kap * lam * t)) / std::pow(den, kap);
}

Complex partition_spectral_sum(int a, Complex tau, const ModelParams& params, double rel_tol) {
  params.validate();
  if (a < 0) throw std::invalid_argument("partition_spectral_sum: zone index must be >= 0");
  if (!(tau.real() > 0))
    throw std::invalid_argument("partition_spectral_sum: Re(tau) must be > 0");
  const double lam = params.lambda_d();
  const int kap = params.kappa;
  const Complex q = std::exp(-2.0 * lam * tau);
  const double qa = std::abs(q);
  Complex sum{0.0, 0.0};
  double mult = 1.0;  // C(p+kappa-1, p)
  Complex qp{1.0, 0.0};
  const Complex front = std::exp(-static_cast<double>(kap) * lam * tau);
  for (int p = 0;; ++p) {
    if (p > 0) {
      mult *= static_cast<double>(p + kap - 1) / static_cast<double>(p);
      qp *= q;
    }
    const Complex term = mult * qp;
    sum += term;
    // Tail bound: multiplicities grow by (p+kappa)/(p+1) <= kappa per step,
    // so the tail is dominated by the geometric series with ratio
    // rho = |q| (p+kappa)/(p+1) once rho < 1.
    const double rho = qa * static_cast<double>(p + kap) / static_cast<double>(p + 1);
    if (rho < 1.0) {
      const double tail = std::abs(term) * rho / (1.0 - rho);
      if (tail <= rel_tol * std::abs(sum) && p >= kap) break;
    }
    if (p > 2000000)
      throw ConvergenceError("partition_spectral_sum: truncation failed to certify");
  }
  const double zone_binom = to_double(binomial(static_cast<unsigned long>(a + kap - 1),
                                               static_cast<unsigned long>(a)));
  return zone_binom * front * sum;
}

}  // namespace zonal
