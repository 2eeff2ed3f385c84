#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "lgtt/elliptic.hpp"
#include "lgtt/gaussmanin.hpp"
#include "lgtt/parse.hpp"

using namespace lgtt;

namespace {

const std::vector<std::string> z3 = {"z1", "z2", "z3"};

LGPotential hesse(const GQ& u) {
  GPoly f = parse_polynomial("z1^3+z2^3+z3^3", z3);
  return LGPotential(f, infer_weights(f), {Monomial{1, 1, 1}}, {u});
}

cplx reduce_fundamental(cplx tau) {
  for (int it = 0; it < 64; ++it) {
    tau -= std::round(tau.real());
    if (std::abs(tau) < 1.0 - 1e-12) tau = -1.0 / tau;
    else break;
  }
  return tau;
}

}  // namespace

TEST_CASE("fermat point: j = 0 curve, tau in the corner of the fundamental domain") {
  auto c = HesseCurve::cubic_coeffs(cplx(0));
  CHECK(std::abs(c[1]) == 0.0);  // depressed cubic: j = 0 exactly
  CHECK(std::abs(c[2]) == 0.0);

  EllipticPeriods E = cy_periods_n3(hesse(GQ(0)), cplx(0), 1e-10);
  CHECK(E.tau.imag() > 0);
  cplx t = reduce_fundamental(E.tau);
  CHECK(std::abs(std::abs(t) - 1.0) < 1e-9);
  CHECK(std::abs(t.imag() - std::sqrt(3.0) / 2.0) < 1e-9);
}

TEST_CASE("degenerate fibers are refused") {
  CHECK_THROWS_AS(cy_periods_n3(hesse(GQ(0)), cplx(-3.0, 0.0), 1e-10), NumericError);
  cplx root = 3.0 * std::exp(cplx(0, M_PI / 3.0));
  CHECK_THROWS_AS(cy_periods_n3(hesse(GQ(0)), root, 1e-10), NumericError);
}

TEST_CASE("family shape is validated") {
  GPoly g = parse_polynomial("z1^3+z2^3+z3^3", z3);
  LGPotential P(g, infer_weights(g));  // no marginal direction
  CHECK_THROWS_AS(cy_periods_n3(P, cplx(0.1, 0), 1e-10), std::domain_error);
}

TEST_CASE("periods are holomorphic: cauchy derivative matches differences") {
  HesseCurve curve;
  cplx u(0.3, 0.15);
  auto d1 = curve.period_derivative(u, 1);
  double h = 1e-4;
  auto Ep = curve.periods(u + h), Em = curve.periods(u - h);
  auto Eip = curve.periods(u + cplx(0, h)), Eim = curve.periods(u - cplx(0, h));
  cplx fd_re = (Ep.Pi0 - Em.Pi0) / (2 * h);
  cplx fd_im = (Eip.Pi0 - Eim.Pi0) / (2 * h * cplx(0, 1));
  CHECK(std::abs(fd_re - fd_im) < 1e-7 * std::abs(d1[0]));  // Cauchy-Riemann
  CHECK(std::abs(fd_re - d1[0]) < 1e-6 * std::abs(d1[0]));
}

TEST_CASE("cy periods satisfy the derived picard-fuchs equation") {
  HesseCurve curve;
  PicardFuchsODE ode = picard_fuchs(hesse(GQ(0)), 0);
  for (cplx u : {cplx(0.2, 0.1), cplx(-0.4, 0.3), cplx(0.8, -0.5), cplx(1.4, 0.2)}) {
    EllipticPeriods E = curve.periods(u);
    auto d1 = curve.period_derivative(u, 1);
    auto d2 = curve.period_derivative(u, 2);
    CHECK(pf_residual(ode, u, {E.Pi0, d1[0], d2[0]}) < 1e-8);
    CHECK(pf_residual(ode, u, {E.Pi1, d1[1], d2[1]}) < 1e-8);
  }
}

TEST_CASE("riemann bilinear formula against direct integration over the curve") {
  // Int_X omega ^ bar(omega) at u = 0, brute force over the double cover:
  // (1/9) * 2 sheets * Int dX^dXbar / |P(X)| with P = -4X^3 - 1/27
  double R = 2e5;
  int nr = 2500, nth = 48;
  double acc = 0;
  for (int i = 0; i < nr; ++i) {
    double t0 = std::log(1e-4), t1 = std::log(R);
    double t = t0 + (t1 - t0) * (i + 0.5) / nr;
    double r = std::exp(t), dr = r * (t1 - t0) / nr;
    for (int j = 0; j < nth; ++j) {
      double th = 2 * M_PI * (j + 0.5) / nth;
      cplx X = r * cplx(std::cos(th), std::sin(th));
      acc += r * dr * (2 * M_PI / nth) / std::abs(-4.0 * X * X * X - cplx(1.0 / 27.0));
    }
  }
  acc += 2 * M_PI / (4.0 * R);  // analytic tail of the 1/(4 r^3) decay
  double direct = -(4.0 / 9.0) * acc;  // imaginary part of the wedge integral

  HesseCurve curve;
  EllipticPeriods E = curve.periods(cplx(0));
  cplx bilinear = E.Pi0 * std::conj(E.Pi1) - E.Pi1 * std::conj(E.Pi0);
  CHECK(std::abs(bilinear.real()) < 1e-10 * std::abs(bilinear));
  CHECK(std::abs(direct - bilinear.imag()) < 0.02 * std::abs(bilinear.imag()));
}

TEST_CASE("period wronskian pins the cup/residue translation constant") {
  // W = Pi0 Pi1' - Pi1 Pi0' must equal -2 pi i n / (27 + u^3) with n = 3
  HesseCurve curve;
  for (cplx u : {cplx(0), cplx(0.3, 0.2), cplx(-0.5, 0.1)}) {
    EllipticPeriods E = curve.periods(u);
    auto d1 = curve.period_derivative(u, 1);
    cplx W = E.Pi0 * d1[1] - E.Pi1 * d1[0];
    cplx expect = cplx(0, -6.0 * M_PI) / (27.0 + u * u * u);
    CHECK(std::abs(W - expect) < 1e-8 * std::abs(expect));
  }
}

TEST_CASE("hodge norm positive and smooth on the disc") {
  HesseCurve curve;
  for (cplx u : {cplx(0), cplx(0.5, 0.2), cplx(-0.6, -0.3), cplx(0.9, 0.9)}) {
    EllipticPeriods E = curve.periods(u);
    CHECK(E.tau.imag() > 0);
    CHECK(E.tau.imag() * std::norm(E.Pi0) > 0);
  }
}
