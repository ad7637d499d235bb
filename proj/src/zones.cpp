#include "zonal/zones.hpp"

#include <cmath>
#include <stdexcept>

#include "zonal/box_operator.hpp"

namespace zonal {

QuantumNumbers qn_from_pq(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("qn_from_pq: negative degree");
  QuantumNumbers qn;
  qn.p = p;
  qn.q = q;
  qn.tau = p + q;
  qn.m = p - q;
  qn.l = std::abs(qn.m);
  qn.n = std::min(p, q);
  return qn;
}

QuantumNumbers qn_from_radial(int n, int l, int sign_m) {
  if (n < 0 || l < 0) throw std::invalid_argument("qn_from_radial: negative input");
  if (l == 0 && sign_m < 0) sign_m = 1;  // m = 0 has a single branch
  if (sign_m == 0) throw std::invalid_argument("qn_from_radial: sign of m required");
  return sign_m > 0 ? qn_from_pq(n + l, n) : qn_from_pq(n, n + l);
}

ExactPoly ito_poly(int p, int q, const Rational& lambda) {
  if (p < 0 || q < 0) throw std::invalid_argument("ito_poly: negative degree");
  if (lambda <= 0) throw std::invalid_argument("ito_poly: lambda must be > 0");
  ExactPoly out;
  const Rational pq = factorial(static_cast<unsigned long>(p)) *
                      factorial(static_cast<unsigned long>(q));
  for (int s = 0; s <= std::min(p, q); ++s) {
    Rational c = pq / (factorial(static_cast<unsigned long>(s)) *
                       factorial(static_cast<unsigned long>(p - s)) *
                       factorial(static_cast<unsigned long>(q - s)));
    if (s % 2 == 1) c = -c;
    c *= pow_rational(lambda, -s);
    out.add_term(p - s, q - s, GaussianRational(c));
  }
  return out;
}

ExactPoly laguerre_eigenfunction(int n, int l, int sign_m, const Rational& lambda) {
  if (n < 0 || l < 0) throw std::invalid_argument("laguerre_eigenfunction: negative input");
  if (lambda <= 0) throw std::invalid_argument("laguerre_eigenfunction: lambda must be > 0");
  // (-1)^n n! lambda^{-n} L_n^{(l)}(lambda t) with t = z zbar, times z^l or zbar^l.
  ExactPoly out;
  Rational front = factorial(static_cast<unsigned long>(n));
  if (n % 2 == 1) front = -front;
  for (int i = 0; i <= n; ++i) {
    // coefficient of t^i in L_n^{(l)}: C(n+l, n-i) (-1)^i / i!
    Rational a = binomial(static_cast<unsigned long>(n + l), static_cast<unsigned long>(n - i)) /
                 factorial(static_cast<unsigned long>(i));
    if (i % 2 == 1) a = -a;
    Rational c = front * a * pow_rational(lambda, i - n);
    if (sign_m >= 0)
      out.add_term(i + l, i, GaussianRational(c));
    else
      out.add_term(i, i + l, GaussianRational(c));
  }
  return out;
}

RadialPoly radial_trim(RadialPoly u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
  return u;
}

bool radial_equal(const RadialPoly& a, const RadialPoly& b) {
  return radial_trim(a) == radial_trim(b);
}

RadialPoly radial_scale(const RadialPoly& u, const Rational& s) {
  RadialPoly out = u;
  for (Rational& c : out) c *= s;
  return radial_trim(std::move(out));
}

RadialPoly radial_ode_apply(const RadialPoly& u, int l_tilde, int p_tilde, int k) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("radial_ode_apply: k must be even >= 2");
  if (l_tilde < 0) throw std::invalid_argument("radial_ode_apply: l~ must be >= 0");
  const long c1 = 2L * k + 4L * l_tilde;
  const long c0 = 4L * p_tilde + 3L * k;
  RadialPoly out(u.size() + 1, Rational(0));
  for (size_t j = 0; j < u.size(); ++j) {
    const long jl = static_cast<long>(j);
    if (j >= 1) out[j - 1] += u[j] * Rational(4 * jl * (jl - 1) + c1 * jl);  // 4t u'' + c1 u'
    out[j] += u[j] * Rational(-4 * jl - c0);                                // -4t u' - c0 u
  }
  return radial_trim(std::move(out));
}

RadialPoly lambda_operator_apply(const RadialPoly& u, const Rational& alpha) {
  RadialPoly out(u.size() + 1, Rational(0));
  for (size_t j = 0; j < u.size(); ++j) {
    const long jl = static_cast<long>(j);
    if (j >= 1) out[j - 1] += u[j] * (Rational(jl * (jl - 1)) + (alpha + 1) * Rational(jl));
    out[j] += u[j] * Rational(-jl);
  }
  return radial_trim(std::move(out));
}

std::pair<RadialPoly, long> radial_eigen_solve(int n, int l_tilde, int p_tilde, int k) {
  if (n < 0) throw std::invalid_argument("radial_eigen_solve: n must be >= 0");
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("radial_eigen_solve: k must be even >= 2");
  if (l_tilde < 0) throw std::invalid_argument("radial_eigen_solve: l~ must be >= 0");
  const long alpha = k / 2 + l_tilde - 1;
  RadialPoly u(static_cast<size_t>(n) + 1, Rational(0));
  u[static_cast<size_t>(n)] = Rational(1);
  for (int j = n - 1; j >= 0; --j) {
    // Lambda_alpha recursion: c_{j+1} (j+1)(j+1+alpha) = (j - n) c_j.
    u[static_cast<size_t>(j)] = u[static_cast<size_t>(j) + 1] *
                                rational((j + 1) * (j + 1 + alpha), j - n);
  }
  const long eigenvalue = -(4L * n + 4L * p_tilde + 3L * k);
  return {std::move(u), eigenvalue};
}

Rational box_eigenvalue(int p, const ModelParams& params) {
  if (p < 0) throw std::invalid_argument("box_eigenvalue: p must be >= 0");
  params.validate();
  const Rational& lam = params.lambda;
  Rational v = Rational(4 * p + 2 * params.kappa) * lam;
  if (params.include_field_term) v += Rational(4 * params.kappa) * lam * lam;
  return -v;
}

Rational landau_energy(int p, const ModelParams& params) {
  if (p < 0) throw std::invalid_argument("landau_energy: p must be >= 0");
  params.validate();
  return Rational(2 * p + params.kappa) * params.lambda;
}

Rational ito_norm_sq(int p, int q, const Rational& lambda) {
  return factorial(static_cast<unsigned long>(p)) * factorial(static_cast<unsigned long>(q)) /
         pow_rational(lambda, p + q + 1);
}

std::complex<double> EigenState::eval_normalized(std::complex<double> z,
                                                 const ModelParams& params) const {
  const double lam = params.lambda_d();
  const double gauss = std::exp(-0.5 * lam * std::norm(z));
  const double scale = 1.0 / std::sqrt(M_PI * to_double(norm_sq));
  return poly.eval(z) * gauss * scale;
}

EigenState make_eigen_state(int p, int q, const ModelParams& params) {
  params.validate();
  EigenState st;
  st.qn = qn_from_pq(p, q);
  st.poly = ito_poly(p, q, params.lambda);
  st.norm_sq = inner_product(st.poly, st.poly, params.lambda).re;
  const int orbit = params.orientation == Orientation::Plus ? p : q;
  st.eigenvalue = box_eigenvalue(orbit, params);
  return st;
}

std::vector<SpectralLine> enumerate_zone_spectrum(int a, const ModelParams& params, int p_max) {
  if (a < 0 || p_max < 0) throw std::invalid_argument("enumerate_zone_spectrum: negative input");
  params.validate();
  const int kap = params.kappa;
  const Integer zone_mult =
      binomial_int(static_cast<unsigned long>(a + kap - 1), static_cast<unsigned long>(a));
  std::vector<SpectralLine> lines;
  lines.reserve(static_cast<size_t>(p_max) + 1);
  for (int p = 0; p <= p_max; ++p) {
    Integer mult = zone_mult * binomial_int(static_cast<unsigned long>(p + kap - 1),
                                            static_cast<unsigned long>(p));
    SpectralLine line;
    line.energy = to_double(landau_energy(p, params));
    line.multiplicity = static_cast<std::int64_t>(mult.get_si());
    line.p = p;
    lines.push_back(line);
  }
  return lines;
}

}  // namespace zonal
