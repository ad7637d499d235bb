// Kernels: closed forms against eigenfunction sums, reproducing/idempotency
// properties by 2D quadrature, Chapman-Kolmogorov, traces, and partition
// functions.  Frozen decimals were computed with 25-digit arithmetic.

#include <doctest.h>

#include <cmath>
#include <complex>

#include "zonal/kernels.hpp"
#include "test_oracles.hpp"

using namespace zonal;
using doctest::Approx;

namespace {

const ModelParams kUnit{};  // lambda = 1, kappa = 1, field on

ModelParams with_kappa(int kappa) {
  ModelParams p;
  p.kappa = kappa;
  return p;
}

}  // namespace

TEST_CASE("point_spread closed-form values") {
  CHECK(point_spread(0, kUnit, Complex{0, 0}, Complex{0, 0}).value.real() ==
        Approx(1.0 / M_PI).epsilon(1e-14));
  // on the diagonal the zone-a kernel is lambda/pi L_a(0) = lambda/pi
  ModelParams lam2;
  lam2.lambda = Rational(2);
  CHECK(point_spread(1, lam2, Complex{0.4, -0.1}, Complex{0.4, -0.1}).value.real() ==
        Approx(2.0 / M_PI).epsilon(1e-13));
  CHECK(point_spread(0, kUnit, Complex{1, 0}, Complex{0, 0}).value.real() ==
        Approx(std::exp(-0.5) / M_PI).epsilon(1e-14));  // 0.19306470526010782
}

TEST_CASE("spectral oracle converges to point_spread") {
  CHECK(spectral_kernel_oracle(0, kUnit, {0, 0}, {0, 0}, 1).real() ==
        Approx(1.0 / M_PI).epsilon(1e-14));
  const Complex z{0.3, 0.0};
  const Complex w{0.1, -0.2};
  // frozen reference values (25-digit run) for zones 0..2
  const Complex expect[3] = {{0.3052784503522455400, 0.0183387187670176281},
                             {0.2808561743240658968, 0.0168716212656562178},
                             {0.2574107893370134394, 0.0154632076643492640}};
  for (int a = 0; a <= 2; ++a) {
    const Complex ps = point_spread(a, kUnit, z, w).value;
    CHECK(std::abs(ps - expect[a]) < 1e-14);
    CHECK(std::abs(spectral_kernel_oracle(a, kUnit, z, w, 40) - ps) < 1e-10);
  }
  CHECK(std::abs(spectral_kernel_oracle(1, kUnit, {0, 0}, {0, 0}, 40) - 1.0 / M_PI) < 1e-10);
}

TEST_CASE("reproducing property by 2D quadrature") {
  const Complex z0{0.35, -0.2};
  for (int a : {0, 1, 2}) {
    for (int p : {0, 1, 3}) {
      const EigenState st = make_eigen_state(p, a, kUnit);
      auto f = [&](Complex w) {
        return point_spread(a, kUnit, z0, w).value * st.eval_normalized(w, kUnit);
      };
      const Complex reproduced = oracle::integrate_plane(f, 7.0, 1e-9);
      CHECK(std::abs(reproduced - st.eval_normalized(z0, kUnit)) < 1e-8);
    }
  }
}

TEST_CASE("idempotency and cross-zone orthogonality") {
  const Complex z{0.4, 0.1};
  const Complex w{-0.25, 0.3};
  for (int a : {0, 1}) {
    for (int b : {0, 1}) {
      auto f = [&](Complex u) {
        return point_spread(a, kUnit, z, u).value * point_spread(b, kUnit, u, w).value;
      };
      const Complex composed = oracle::integrate_plane(f, 7.5, 1e-9);
      if (a == b) {
        CHECK(std::abs(composed - point_spread(a, kUnit, z, w).value) < 1e-8);
      } else {
        CHECK(std::abs(composed) < 1e-8);
      }
    }
  }
}

TEST_CASE("global Wiener kernel") {
  // 1/(2 pi sinh 1)
  CHECK(wiener_global(1.0, kUnit, Complex{0, 0}, Complex{0, 0}).value.real() ==
        Approx(0.1354278262757913180).epsilon(1e-13));
  // J(0) = 0: kernel real for Y = 0
  CHECK(wiener_global(0.8, kUnit, Complex{0.3, 0.7}, Complex{0, 0}).value.imag() == 0.0);
  // frozen complex value, and agreement with the zone decomposition
  const Complex z{0.4, 0.7};
  const Complex w{-0.3, 0.2};
  const Complex direct = wiener_global(0.35, kUnit, z, w).value;
  CHECK(std::abs(direct - Complex{0.1421314552813065002, 0.0424138436296632357}) < 1e-13);
  Complex zsum{0, 0};
  for (int a = 0; a <= 40; ++a) zsum += wiener_zonal(a, 0.35, kUnit, z, w).value;
  CHECK(std::abs(direct - zsum) < 1e-9);
  // huge lambda t underflows to zero, never NaN
  ModelParams big;
  big.lambda = Rational(1000);
  const Complex v = wiener_global(5.0, big, z, w).value;
  CHECK(v == Complex{0.0, 0.0});
}

TEST_CASE("global Wiener Chapman-Kolmogorov by 2D quadrature") {
  const Complex x{0, 0};
  const Complex y{0.7, 0};
  auto f = [&](Complex u) {
    return wiener_global(0.5, kUnit, x, u).value * wiener_global(0.5, kUnit, u, y).value;
  };
  const Complex composed = oracle::integrate_plane(f, 8.0, 1e-9);
  const Complex direct = wiener_global(1.0, kUnit, x, y).value;
  CHECK(std::abs(direct - Complex{0.0981743722308236633, 0.0}) < 1e-13);
  CHECK(std::abs(composed - direct) < 1e-8);
}

TEST_CASE("global Schrodinger kernel") {
  // lambda t = pi/2: 1/(2 pi i)
  const Complex v = schrodinger_global(M_PI / 2.0, kUnit, Complex{0, 0}, Complex{0, 0}).value;
  CHECK(std::abs(v - Complex{0.0, -0.1591549430918953358}) < 1e-14);
  CHECK_THROWS_AS(schrodinger_global(M_PI, kUnit, Complex{0, 0}, Complex{0, 0}),
                  SingularTimeError);
  // prefactor modulus at X = Y: |K| 2 pi |sin(lambda t)| / lambda = 1
  for (double t : {0.3, 1.1, 2.9}) {
    const Complex k = schrodinger_global(t, kUnit, Complex{0.5, 0.2}, Complex{0.5, 0.2}).value;
    CHECK(std::abs(k) * 2.0 * M_PI * std::fabs(std::sin(t)) == Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("zonal Wiener closed form, limits, and trace") {
  CHECK(wiener_zonal(0, 1.0, kUnit, Complex{0, 0}, Complex{0, 0}).value.real() ==
        Approx(std::exp(-1.0) / M_PI).epsilon(1e-13));  // 0.11709966304863832

  // t -> 0+ recovers the point spread (1e-4 relative at t = 1e-6)
  const Complex pts[5][2] = {{{0.0, 0.0}, {0.0, 0.0}},
                             {{0.5, 0.0}, {0.0, 0.0}},
                             {{0.3, -0.4}, {0.2, 0.1}},
                             {{1.0, 0.5}, {-0.5, 0.25}},
                             {{-0.7, 0.1}, {0.6, -0.3}}};
  for (const auto& pr : pts) {
    const Complex lim = wiener_zonal(0, 1e-6, kUnit, pr[0], pr[1]).value;
    const Complex ps = point_spread(0, kUnit, pr[0], pr[1]).value;
    CHECK(std::abs(lim - ps) / std::abs(ps) < 1e-4);
  }

  // trace by radial quadrature: int K(t,z,z) dA = e^{-t}/(1-e^{-2t})
  auto diag = [&](double r) -> Complex {
    return wiener_zonal(0, 1.0, kUnit, Complex{r, 0}, Complex{r, 0}).value * 2.0 * M_PI * r;
  };
  const Complex trace = numerics::integrate_to_infinity(numerics::ComplexIntegrand(diag), 0.0,
                                                        1e-11)
                            .value;
  CHECK(std::abs(trace - Complex{0.4254590641196607726, 0.0}) < 1e-8);
  CHECK(std::abs(trace - partition_zonal(0, 1.0, kUnit, FlowKind::Wiener)) < 1e-8);
}

TEST_CASE("zonal Wiener a > 0 spectral path satisfies Chapman-Kolmogorov") {
  // spectral-sum kernel at a=1 equals its own composition (2D quadrature)
  const Complex z{0.3, 0.2};
  const Complex w{-0.1, 0.45};
  auto f = [&](Complex u) {
    return wiener_zonal(1, 0.4, kUnit, z, u).value * wiener_zonal(1, 0.6, kUnit, u, w).value;
  };
  const Complex composed = oracle::integrate_plane(f, 7.0, 1e-9);
  const Complex direct = wiener_zonal(1, 1.0, kUnit, z, w).value;
  CHECK(std::abs(composed - direct) < 1e-8);
}

TEST_CASE("zonal Schrodinger kernel") {
  const Complex v = schrodinger_zonal(0, 0.7, kUnit, Complex{0, 0}, Complex{0, 0}).value;
  CHECK(std::abs(v - Complex{0.2434568295830870289, -0.2050608587022142847}) < 1e-13);

  // no caustic: finite at lambda t = pi where the global kernel is singular
  const Complex at_pi = schrodinger_zonal(0, M_PI, kUnit, Complex{0.2, 0}, Complex{0.1, 0}).value;
  CHECK(std::isfinite(at_pi.real()));

  // a = 1 spectral path against the a = 1 projection at t -> 0+
  const Complex z{0.25, -0.3};
  const Complex w{0.1, 0.2};
  const Complex lim = schrodinger_zonal(1, 1e-7, kUnit, z, w).value;
  const Complex ps = point_spread(1, kUnit, z, w).value;
  CHECK(std::abs(lim - ps) / std::abs(ps) < 1e-4);

  // far outside the certification budget the truncation fails loudly
  CHECK_THROWS_AS(wiener_zonal(1, 1e-9, kUnit, Complex{40.0, 0.0}, Complex{40.0, 0.0}),
                  ConvergenceError);

  // Chapman-Kolmogorov at the coefficient level: the flow phases compose
  for (int p = 0; p <= 50; ++p) {
    const double h = 2.0 * p + 1.0;
    const Complex lhs = std::exp(Complex(0, -0.4 * h)) * std::exp(Complex(0, -0.9 * h));
    CHECK(std::abs(lhs - std::exp(Complex(0, -(0.4 + 0.9) * h))) < 1e-13);
  }
}

TEST_CASE("Schrodinger zonal trace matches the partition closed form") {
  // |K(t,r,r)| ~ e^{-lambda (1-cos 2 lambda t) r^2}, so at t = 0.8 the tail
  // beyond r = 12 is below 1e-60; integrate the diagonal on [0, 12].
  for (int a : {0, 1}) {
    const double t = 0.8;
    auto diag = [&](double r) -> Complex {
      return schrodinger_zonal(a, t, kUnit, Complex{r, 0}, Complex{r, 0}).value * 2.0 * M_PI * r;
    };
    const Complex trace =
        numerics::integrate_adaptive(numerics::ComplexIntegrand(diag), 0.0, 12.0, 1e-10).value;
    CHECK(std::abs(trace - partition_zonal(a, t, kUnit, FlowKind::Schrodinger)) < 1e-8);
  }
}

TEST_CASE("global Wiener trace diverges with the ball radius") {
  // magnetic translation invariance makes the diagonal constant, so the
  // ball integrals grow without bound, linearly in the area: no global trace
  const double t = 0.7;
  const double at0 = wiener_global(t, kUnit, Complex{0, 0}, Complex{0, 0}).value.real();
  for (const Complex x : {Complex{1.3, -2.0}, Complex{0.2, 5.0}, Complex{-7.0, 3.5}})
    CHECK(wiener_global(t, kUnit, x, x).value.real() == Approx(at0).epsilon(1e-13));

  double prev = 0.0;
  for (double R : {1.0, 2.0, 4.0, 8.0}) {
    auto diag = [&](double r) -> Complex {
      return wiener_global(t, kUnit, Complex{r, 0}, Complex{r, 0}).value * 2.0 * M_PI * r;
    };
    const double ball =
        numerics::integrate_adaptive(numerics::ComplexIntegrand(diag), 0.0, R, 1e-10)
            .value.real();
    CHECK(ball > prev);
    CHECK(ball >= 0.99 * M_PI * R * R * at0);  // at least linear in the area
    prev = ball;
  }
}

TEST_CASE("partition function closed forms") {
  CHECK(partition_zonal(0, 1.0, kUnit, FlowKind::Wiener).real() ==
        Approx(0.4254590641196607726).epsilon(1e-14));
  // isospectral zones at kappa = 1: C(a, a) = 1
  CHECK(partition_zonal(2, 1.0, kUnit, FlowKind::Wiener) ==
        partition_zonal(0, 1.0, kUnit, FlowKind::Wiener));
  // kappa = 2, a = 1: 2 e^{-2} / (1 - e^{-2})^2
  CHECK(partition_zonal(1, 1.0, with_kappa(2), FlowKind::Wiener).real() ==
        Approx(0.3620308304831552332).epsilon(1e-13));
  CHECK_THROWS_AS(partition_zonal(0, M_PI, kUnit, FlowKind::Schrodinger), SingularTimeError);
}

TEST_CASE("spectral sum equals the partition function at complex time") {
  for (int kappa : {1, 2, 3}) {
    ModelParams p = with_kappa(kappa);
    for (int a : {0, 1, 3}) {
      const double binom = to_double(binomial(a + kappa - 1, a));
      for (double t : {0.1, 0.9, 2.7, 5.0}) {
        for (double delta : {0.05, 0.4}) {
          const Complex tau{delta, t};
          const Complex sum = partition_spectral_sum(a, tau, p, 1e-13);
          const Complex den = 1.0 - std::exp(-2.0 * tau);
          const Complex closed =
              binom * std::exp(-static_cast<double>(kappa) * tau) / std::pow(den, kappa);
          CHECK(std::abs(sum - closed) / std::abs(closed) < 1e-10);
        }
      }
    }
  }
}
