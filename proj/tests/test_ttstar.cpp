#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "lgtt/parse.hpp"
#include "lgtt/ttstar.hpp"

using namespace lgtt;

namespace {

const std::vector<std::string> z3 = {"z1", "z2", "z3"};

LGPotential hesse_family() {
  GPoly f = parse_polynomial("z1^3+z2^3+z3^3", z3);
  return LGPotential(f, infer_weights(f), {Monomial{1, 1, 1}}, {GQ(0)});
}

const HesseVerifier& verifier() {
  static HesseVerifier V(hesse_family());
  return V;
}

}  // namespace

TEST_CASE("intersection data for the curve") {
  IntersectionData D = intersection_cy_n3();
  CHECK(D.I_cy == std::vector<std::vector<long>>{{0, 1}, {-1, 0}});
  CHECK(D.Icy_inv == std::vector<std::vector<long>>{{0, -1}, {1, 0}});
  long det = D.I_cy[0][0] * D.I_cy[1][1] - D.I_cy[0][1] * D.I_cy[1][0];
  CHECK(det == 1);
}

TEST_CASE("calibration: integer unimodular matching on both sides") {
  const HesseVerifier& V = verifier();
  long detm = V.n_minus()[0][0] * V.n_minus()[1][1] - V.n_minus()[0][1] * V.n_minus()[1][0];
  long detp = V.n_plus()[0][0] * V.n_plus()[1][1] - V.n_plus()[0][1] * V.n_plus()[1][0];
  CHECK(std::labs(detm) == 1);
  CHECK(std::labs(detp) == 1);
}

TEST_CASE("period correspondence across the grid") {
  const HesseVerifier& V = verifier();
  auto grid = disc_grid(cplx(0), 1.0, 12);
  RuanReport rep = V.verify_ruan(grid, 1e-6);
  CHECK(rep.pass);
  CHECK(rep.max_residual < 1e-6);

  // sensitivity: a 1% wrong constant must blow the residual past 1e-2
  RuanReport bad = V.verify_ruan(grid, 1e-6, 0.01);
  CHECK(bad.max_residual > 1e-2);
}

TEST_CASE("vacuum norm: real, positive, symmetric under the Z3 rotation") {
  const HesseVerifier& V = verifier();
  for (cplx u : {cplx(0.2, 0.1), cplx(-0.5, 0.3), cplx(0.0, -0.6)}) {
    double h = V.vacuum_norm(u);
    CHECK(h > 0);
    cplx zeta = std::exp(cplx(0, 2.0 * M_PI / 3.0));
    double hrot = V.vacuum_norm(zeta * u);
    CHECK(std::abs(hrot - h) < 1e-8 * h);
  }
}

TEST_CASE("vacuum norm equals the CY hodge norm through the constant chain") {
  const HesseVerifier& V = verifier();
  for (cplx u : {cplx(0), cplx(0.3, -0.2), cplx(-0.4, 0.4)}) {
    double lg = V.vacuum_norm(u);
    EllipticPeriods E = V.cy(u);
    double pi4 = std::pow(M_PI, 4);
    double cy = 16.0 * pi4 * E.tau.imag() * std::norm(E.Pi0);
    CHECK(std::abs(lg - cy) < 1e-8 * cy);
  }
}

TEST_CASE("pairing chain: measured bilinears match the residue route") {
  const HesseVerifier& V = verifier();
  auto grid = disc_grid(cplx(0), 1.0, 12);
  PairingReport rep = V.verify_pairing_chain(grid, 1e-6, 1e-10);
  CHECK(rep.pass);
  CHECK(rep.max_relative_residual < 1e-6);
  CHECK(rep.max_forbidden < 1e-10);
}

TEST_CASE("intersection fit reproduces the pinned constant") {
  const HesseVerifier& V = verifier();
  auto grid = disc_grid(cplx(0), 1.0, 12);
  FitReport rep = V.fit_intersection_lg(grid, 1e-4);
  CHECK(rep.pass);
  CHECK(rep.entry_mismatch < 1e-4);
  CHECK(rep.fit_residual < 1e-6);
  CHECK(rep.half_grid_drift < 1e-5);
}

TEST_CASE("basis-change invariance of the reported scalars") {
  // integer unimodular twists of the invariant thimble bases recalibrate N
  // and the intersection matrix; every reported scalar must be unchanged
  const HesseVerifier& V = verifier();
  HesseVerifier V2(hesse_family(), 1e-12, {{2, 1}, {1, 1}}, {{1, -3}, {0, 1}});
  auto grid = disc_grid(cplx(0), 0.8, 6);
  for (cplx u : {cplx(0.25, 0.15), cplx(-0.3, -0.2)}) {
    CHECK(std::abs(V2.vacuum_norm(u) - V.vacuum_norm(u)) < 1e-9 * V.vacuum_norm(u));
    cplx e = V.eta_pair(u, V.vacuum_index(), V.socle_prime_index());
    cplx e2 = V2.eta_pair(u, V2.vacuum_index(), V2.socle_prime_index());
    CHECK(std::abs(e - e2) < 1e-9 * std::abs(e));
  }
  RuanReport r1 = V.verify_ruan(grid, 1e-6);
  RuanReport r2 = V2.verify_ruan(grid, 1e-6);
  CHECK(r1.pass);
  CHECK(r2.pass);
  CHECK(std::labs(r2.det) == 1);
}

TEST_CASE("weil-petersson equality on the sampled square") {
  const HesseVerifier& V = verifier();
  auto grid = square_grid(cplx(0), 0.35, 3);
  WPReport rep = V.wp_equality(grid, 1e-2, 1e-4, 1e-5);
  CHECK(rep.pass);
  CHECK(rep.max_relative_difference < 1e-4);
  CHECK(rep.max_richardson_drift < 1e-5);
  for (auto& f : rep.frames) {
    CHECK(f.h00 > 0);
    CHECK(f.G_lg > 0);  // metric positivity at the sampled points
  }
}

TEST_CASE("eta entries: charge rule and the excluded corner") {
  const HesseVerifier& V = verifier();
  TTFrame f = V.frame(cplx(0.2, 0.3), 1e-2);
  CHECK(f.eta_known[0][0] == 1);
  CHECK(f.eta_known[1][1] == 0);  // needs T-matrix data beyond the vacuum row
  double scale = std::abs(f.eta_prime[0][1]);
  CHECK(std::abs(f.eta_prime[0][0]) < 1e-10 * scale);
}
