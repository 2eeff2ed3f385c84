#include "lgtt/elliptic.hpp"

#include <cmath>

#include "lgtt/ratfunc.hpp"

namespace lgtt {

namespace {

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = 0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1) * t * p1 - j * p2) / (j + 1);
      }
      double dp = n * (t * p0 - p1) / (t * t - 1);
      double dt = p0 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[i] = t;
    double p0 = 1, p1 = 0;
    for (int j = 0; j < n; ++j) {
      double p2 = p1;
      p1 = p0;
      p0 = ((2 * j + 1) * t * p1 - j * p2) / (j + 1);
    }
    double dp = n * (t * p0 - p1) / (t * t - 1);
    w[i] = 2.0 / ((1 - t * t) * dp * dp);
  }
  // ascending order keeps branch tracking sequential
  for (int i = 0; i < n / 2; ++i) {
    std::swap(x[i], x[n - 1 - i]);
    std::swap(w[i], w[n - 1 - i]);
  }
}

cplx nearest_sqrt(cplx v, cplx anchor) {
  cplx s = std::sqrt(v);
  return std::abs(s - anchor) <= std::abs(-s - anchor) ? s : -s;
}

}  // namespace

std::array<cplx, 4> HesseCurve::cubic_coeffs(cplx u) {
  cplx u3 = u * u * u;
  return {-(108.0 + 4.0 * u3) / 27.0, -u * u / 3.0, -2.0 * u / 9.0, cplx(-1.0 / 27.0)};
}

HesseCurve::HesseCurve(int quad_nodes, double step) : nodes_(quad_nodes), step_(step) {
  gauss_legendre(nodes_, gl_x_, gl_w_);
  Frame f = base_frame();
  auto [pa, pb] = raw_periods(f, cplx(0));
  sign_B_ = (pb / pa).imag() > 0 ? 1 : -1;
}

HesseCurve::Frame HesseCurve::base_frame() const {
  // -4 X^3 - 1/27 = 0: roots r e^{i pi/3}, r e^{i pi}, r e^{5 i pi/3}
  double r = std::pow(1.0 / 108.0, 1.0 / 3.0);
  Frame f;
  f.roots = {r * cplx(std::cos(M_PI / 3), std::sin(M_PI / 3)), cplx(-r, 0),
             r * cplx(std::cos(5 * M_PI / 3), std::sin(5 * M_PI / 3))};
  f.anchorA = 0;  // filled on first integration
  f.anchorB = 0;
  return f;
}

HesseCurve::Frame HesseCurve::advance(const Frame& f, cplx u) const {
  auto c = cubic_coeffs(u);
  auto rts = poly_roots({c[3], c[2], c[1], c[0]});
  if (rts.size() != 3) throw NumericError("hesse curve: root count changed along continuation");
  Frame g = f;
  bool used[3] = {false, false, false};
  for (int i = 0; i < 3; ++i) {
    int best = -1;
    double bd = 0;
    for (int j = 0; j < 3; ++j) {
      if (used[j]) continue;
      double d = std::abs(rts[j] - f.roots[i]);
      if (best < 0 || d < bd) {
        bd = d;
        best = j;
      }
    }
    used[best] = true;
    g.roots[i] = rts[best];
  }
  return g;
}

cplx HesseCurve::cycle_integral(const std::array<cplx, 3>& roots, int p, int q, int other,
                                cplx c3, cplx& anchor) const {
  cplx mid = 0.5 * (roots[p] + roots[q]);
  cplx half = 0.5 * (roots[q] - roots[p]);
  cplx acc = 0;
  cplx prev;
  for (int i = 0; i < nodes_; ++i) {
    double th = 0.5 * M_PI * gl_x_[i];
    cplx X = mid + half * std::sin(th);
    cplx g2 = c3 * (X - roots[other]);
    if (std::abs(g2) < 1e-14) throw NumericError("hesse curve: cycle pinched by the third root");
    cplx g = (i == 0) ? (anchor == cplx(0) ? std::sqrt(g2) : nearest_sqrt(g2, anchor))
                      : nearest_sqrt(g2, prev);
    if (i == 0) anchor = g;
    prev = g;
    acc += gl_w_[i] * (0.5 * M_PI) / g;
  }
  // oint dX/Y over the loop around e_p, e_q; the form is (1/3) dX/Y
  return (1.0 / 3.0) * (-2.0 * cplx(0, 1)) * acc;
}

std::pair<cplx, cplx> HesseCurve::raw_periods(const Frame& f, cplx u) const {
  auto c = cubic_coeffs(u);
  Frame g = f;
  cplx pa = cycle_integral(g.roots, 0, 1, 2, c[0], g.anchorA);
  cplx pb = cycle_integral(g.roots, 1, 2, 0, c[0], g.anchorB);
  return {pa, pb};
}

EllipticPeriods HesseCurve::periods(cplx u) const {
  cplx u3 = u * u * u;
  if (std::abs(u3 + 27.0) < 1e-9)
    throw NumericError("hesse curve: degenerate fiber u^3 = -27");
  if (std::abs(u) >= 2.95)
    throw NumericError("hesse curve: continuation kept inside |u| < 3");

  int steps = std::max(1, static_cast<int>(std::ceil(std::abs(u) / step_)));
  Frame f = base_frame();
  cplx pa = 0, pb = 0;
  for (int k = 0; k <= steps; ++k) {
    cplx v = u * (static_cast<double>(k) / steps);
    f = advance(f, v);
    auto c = cubic_coeffs(v);
    pa = cycle_integral(f.roots, 0, 1, 2, c[0], f.anchorA);
    pb = cycle_integral(f.roots, 1, 2, 0, c[0], f.anchorB);
  }
  EllipticPeriods out;
  out.Pi0 = pa;
  out.Pi1 = static_cast<double>(sign_B_) * pb;
  out.tau = out.Pi1 / out.Pi0;
  return out;
}

std::array<cplx, 2> HesseCurve::period_derivative(cplx u, int k, double rho, int nodes) const {
  // Cauchy: Pi^(k)(u) = k!/(2 pi i) oint Pi(v) / (v-u)^{k+1} dv
  std::array<cplx, 2> acc = {0, 0};
  double fact = 1;
  for (int j = 2; j <= k; ++j) fact *= j;
  for (int i = 0; i < nodes; ++i) {
    double th = 2.0 * M_PI * i / nodes;
    cplx dv = rho * cplx(std::cos(th), std::sin(th));
    EllipticPeriods P = periods(u + dv);
    // dv/(2 pi i) with trapezoid weight folds into dv / nodes; divide by dv^{k+1}
    cplx w = dv / (static_cast<double>(nodes) * std::pow(dv, k + 1));
    acc[0] += fact * P.Pi0 * w;
    acc[1] += fact * P.Pi1 * w;
  }
  return acc;
}

EllipticPeriods cy_periods_n3(const LGPotential& P, cplx u, double tol) {
  (void)tol;
  if (P.nvars() != 3) throw std::domain_error("cy_periods_n3: three variables required");
  std::vector<int> m = diagonal_exponents(P.f);
  if (m != std::vector<int>{3, 3, 3})
    throw std::domain_error("cy_periods_n3: potential must be the Fermat cubic family");
  if (P.s() != 1 || !(P.marginals[0] == Monomial{1, 1, 1}))
    throw std::domain_error("cy_periods_n3: marginal direction must be z1 z2 z3");
  static const HesseCurve curve;
  return curve.periods(u);
}

}  // namespace lgtt
