#include "zonal/lamb.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace zonal::lamb {

namespace {

using numerics::StirlingVariant;

struct Density {
  std::function<double(double)> E;
  std::function<double(double)> dE;
};

Density make_density(DensityKind kind) {
  if (kind == DensityKind::Stirling) {
    return {[](double k) { return numerics::stirling_S(k, StirlingVariant::OneOverPi).first; },
            [](double k) { return numerics::stirling_S(k, StirlingVariant::OneOverPi).second; }};
  }
  return {[](double k) { return std::sqrt(M_PI) * numerics::gamma_ratio_G(k).first; },
          [](double k) { return std::sqrt(M_PI) * numerics::gamma_ratio_G(k).second; }};
}

// Cutoff at which the exact envelope bound on the discarded tail,
// int_K^inf beta E |E'| dk = (beta/2) E_K^2 (E decreasing), is below bound.
double choose_cutoff(const Density& d, double beta, double bound, double scale) {
  double K = 1024.0;
  while (0.5 * beta * d.E(K) * d.E(K) > bound) {
    K *= 2.0;
    if (K > 1e14) throw ConvergenceError("sigma_integral: tail bound does not reach tolerance");
  }
  return K * scale;
}

}  // namespace

std::pair<double, double> dimensionless_energies(int l) {
  if (l < 0) throw std::invalid_argument("dimensionless_energies: l must be >= 0");
  return {4.0 * l + 2.0, 4.0};
}

AmplitudeResult sigma_integral(double epsilon, DensityKind density, double tol,
                               double cutoff_scale) {
  if (!(tol > 0)) throw std::invalid_argument("sigma_integral: tol must be > 0");
  if (!(epsilon > 0)) throw std::invalid_argument("sigma_integral: epsilon must be > 0");
  const Density d = make_density(density);
  const double beta = 0.5 * std::sqrt(M_PI) * epsilon;

  const double K = choose_cutoff(d, beta, 0.1 * tol, cutoff_scale);
  const double tail_bound = 0.5 * beta * d.E(K) * d.E(K);

  auto f = [&](double k) -> std::complex<double> {
    const double e = d.E(k);
    const double de = d.dE(k);
    return e * std::complex<double>(0.0, -beta * de) *
           std::exp(std::complex<double>(0.0, -beta * e));
  };
  ComplexQuadratureResult res = numerics::integrate_blocks(f, 0.0, K, 0.5 * tol);

  AmplitudeResult out;
  out.sigma = res.value;
  out.abs_err = res.abs_error_estimate + tail_bound;
  out.density_kind = density;
  return out;
}

AmplitudeResult sigma_p(int l, DensityKind density, double tol, double cutoff_scale) {
  if (l < 0) throw std::invalid_argument("sigma_p: l must be >= 0");
  AmplitudeResult out = sigma_integral(dimensionless_energies(l).first, density, tol, cutoff_scale);
  out.epsilon_kind = EpsilonKind::EpsilonP;
  out.l = l;
  return out;
}

AmplitudeResult sigma_B(DensityKind density, double tol, double cutoff_scale) {
  AmplitudeResult out =
      sigma_integral(dimensionless_energies(0).second, density, tol, cutoff_scale);
  out.epsilon_kind = EpsilonKind::EpsilonB;
  return out;
}

std::complex<double> sigma_closed_form(int l) {
  if (l < 0) throw std::invalid_argument("sigma_closed_form: l must be >= 0");
  const double sq = std::sqrt(M_PI);
  return {sq, -1.0 / (sq * (l + 0.5))};
}

std::complex<double> sigma_B_closed_form() { return {-std::sqrt(M_PI), 0.0}; }

std::complex<double> sigma_total_closed_form(int l) {
  if (l < 0) throw std::invalid_argument("sigma_total_closed_form: l must be >= 0");
  return {0.0, -1.0 / (std::sqrt(M_PI) * (l + 0.5))};
}

LambShift lamb_shift(int l, ShiftMode mode, const PhysicalConstants& constants) {
  if (l < 0) throw std::invalid_argument("lamb_shift: l must be >= 0");
  const double lh = l + 0.5;
  double sigma_sq;  // sigma sigmabar
  if (mode == ShiftMode::EpsilonP) {
    sigma_sq = M_PI + 1.0 / (M_PI * lh * lh);
  } else {
    sigma_sq = 1.0 / (M_PI * lh * lh);
  }
  LambShift out;
  out.dimensionless = 0.25 * sigma_sq;
  const double energy_J = std::pow(constants.alpha, 5) * constants.me_c2_J() * out.dimensionless;
  out.energy_eV = energy_J / constants.e_charge;
  out.frequency_MHz = energy_J / constants.h / 1e6;
  return out;
}

DiscreteVsIntegral discrete_vs_integral(int l, int K, double tol) {
  if (l < 0) throw std::invalid_argument("discrete_vs_integral: l must be >= 0");
  if (K < 10) throw std::invalid_argument("discrete_vs_integral: K must be >= 10");
  const Density d = make_density(DensityKind::Stirling);
  const double beta = 0.5 * std::sqrt(M_PI) * dimensionless_energies(l).first;
  auto phase = [&](double k) { return std::exp(std::complex<double>(0.0, -beta * d.E(k))); };

  DiscreteVsIntegral out;
  for (int k = 0; k <= K; ++k) out.discrete_sum += d.E(k) * (phase(k + 1) - phase(k));

  auto f = [&](double k) -> std::complex<double> {
    return d.E(k) * std::complex<double>(0.0, -beta * d.dE(k)) * phase(k);
  };
  out.integral = numerics::integrate_blocks(f, 0.0, static_cast<double>(K) + 1.0, tol).value;
  out.gap = std::abs(out.discrete_sum - out.integral);
  return out;
}

AmplitudeResult scalar_density_sigma(int l, DensityKind density, double tol) {
  if (l < 0) throw std::invalid_argument("scalar_density_sigma: l must be >= 0");
  if (!(tol > 0)) throw std::invalid_argument("scalar_density_sigma: tol must be > 0");
  const Density d = make_density(density);
  const double beta = 0.5 * std::sqrt(M_PI) * dimensionless_energies(l).first;
  const double K = choose_cutoff(d, beta, 0.1 * tol, 1.0);
  const double tail_bound = 0.5 * beta * d.E(K) * d.E(K);

  auto f = [&](double k) {
    const double e = d.E(k);
    return e * (-beta * d.dE(k)) * std::exp(-beta * e);
  };
  QuadratureResult res = numerics::integrate_blocks(f, 0.0, K, 0.5 * tol);

  AmplitudeResult out;
  out.sigma = {res.value, 0.0};
  out.abs_err = res.abs_error_estimate + tail_bound;
  out.density_kind = density;
  out.epsilon_kind = EpsilonKind::EpsilonP;
  out.l = l;
  return out;
}

PartialFraction lamb_partial_fraction(int l) {
  if (l < 0) throw std::invalid_argument("lamb_partial_fraction: l must be >= 0");
  const double lh = l + 0.5;
  PartialFraction pf;
  pf.lhs = 1.0 / (M_PI * lh * lh);
  pf.first_term = 1.0 / (2.0 * M_PI * (l + 1.0) * lh * lh);
  pf.second_term = 1.0 / (M_PI * (l + 1.0) * lh);
  return pf;
}

}  // namespace zonal::lamb
