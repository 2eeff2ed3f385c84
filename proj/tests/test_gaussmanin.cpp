#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "lgtt/gaussmanin.hpp"
#include "lgtt/parse.hpp"

using namespace lgtt;

namespace {

const std::vector<std::string> z3 = {"z1", "z2", "z3"};

LGPotential hesse(const GQ& u) {
  GPoly f = parse_polynomial("z1^3+z2^3+z3^3", z3);
  return LGPotential(f, infer_weights(f), {Monomial{1, 1, 1}}, {u});
}

}  // namespace

TEST_CASE("hesse restricted connection block") {
  for (const GQ& u : {GQ(0), GQ(Rat(1, 2)), GQ(Rat(-1), Rat(1))}) {
    ConnectionMatrices M = c_matrices(hesse(u));
    REQUIRE(M.mu_prime == 2);
    CHECK(M.restricted_C[0][0][0] == GQ(0));
    CHECK(M.restricted_C[0][0][1] == GQ(0));
    CHECK(M.restricted_C[0][1][0] == GQ(1));
    CHECK(M.restricted_C[0][1][1] == GQ(0));
  }
}

TEST_CASE("degenerate parameter fails c_matrices") {
  CHECK_THROWS_AS(c_matrices(hesse(GQ(Rat(-3)))), DegenerateError);
}

TEST_CASE("column of the unit is the basis expansion of psi") {
  LGPotential P = hesse(GQ(Rat(1, 3)));
  GJacobiRing ring(P);
  const auto& B = ring.basis();
  ConnectionMatrices M = c_matrices(ring);
  int qa = B.index_of(Monomial{1, 1, 1});
  REQUIRE(M.C[0].col[0].size() == 1);
  CHECK(M.C[0].col[0][0].first == qa);
  CHECK(M.C[0].col[0][0].second == GQ(1));
}

TEST_CASE("quintic commutators vanish exactly on sampled pairs") {
  std::vector<std::string> z5 = {"z1", "z2", "z3", "z4", "z5"};
  GPoly f = parse_polynomial("z1^5+z2^5+z3^5+z4^5+z5^5", z5);
  WeightSystem w = infer_weights(f);
  GJacobiRing ring0(LGPotential(f, w));
  auto psis = ring0.marginal_monomials();
  REQUIRE(psis.size() == 101);
  LGPotential P(f, w, psis, std::vector<GQ>(psis.size(), GQ(0)));
  GJacobiRing ring(P);
  ConnectionMatrices M = c_matrices(ring);
  std::mt19937 rng(77);
  for (int t = 0; t < 40; ++t) {
    int i = static_cast<int>(rng() % 101);
    int j = static_cast<int>(rng() % 101);
    CHECK(c_matrices_commute(M, i, j));
  }
}

TEST_CASE("griffiths-dwork: pure ideal member reduces in one step") {
  LGPotential P = hesse(GQ(Rat(1, 2)));
  GPoly F = P.F();
  GPoly h = parse_polynomial("z1^2*z2*z3", z3);
  GPoly phi = F.derivative(0) * h;  // degree 6 = n(k-1) for k = 3
  GDReduction red = griffiths_dwork_reduce(phi, 3, P);
  CHECK(red.fully_reduced);
  for (auto& t : red.terms) CHECK(t.pole < 3);
}

TEST_CASE("griffiths-dwork: one step at pole order 2") {
  // phi = h dF/dz1 with deg phi = 3 drops to a single pole-1 class
  LGPotential P = hesse(GQ(Rat(1, 2)));
  GPoly phi = P.F().derivative(0) * parse_polynomial("z1", z3);
  GDReduction red = griffiths_dwork_reduce(phi, 2, P);
  CHECK(red.fully_reduced);
  REQUIRE(red.terms.size() == 1);
  CHECK(red.terms[0].pole == 1);
}

TEST_CASE("griffiths-dwork: hesse socle square reduces fully below pole 3") {
  GPoly q2 = parse_polynomial("(z1*z2*z3)^2", z3);
  GDReduction red = griffiths_dwork_reduce(q2, 3, hesse(GQ(Rat(1, 2))));
  CHECK(red.fully_reduced);
  for (auto& t : red.terms) {
    CHECK(t.pole <= 2);
    CHECK(!t.irreducible);
  }
}

TEST_CASE("griffiths-dwork: basis element is its own irreducible part") {
  GPoly q = parse_polynomial("z1*z2*z3", z3);
  GDReduction red = griffiths_dwork_reduce(q, 2, hesse(GQ(Rat(1, 2))));
  CHECK(!red.fully_reduced);
  REQUIRE(!red.terms.empty());
  CHECK(red.terms[0].irreducible);
  CHECK(red.terms[0].pole == 2);
  CHECK(red.terms[0].poly == q);
}

TEST_CASE("griffiths-dwork membership identity is exact") {
  LGPotential P = hesse(GQ(Rat(1, 2)));
  GJacobiRing ring(P, true);
  GPoly F = P.F();
  std::mt19937 rng(4);
  for (int t = 0; t < 20; ++t) {
    GPoly g(3);
    for (auto& m : monomials_of_degree(3, 6))
      g.add_term(m, GQ(Rat(static_cast<long>(rng() % 11) - 5)));
    auto [r, h] = ring.nf_decompose(g);
    GPoly back = r;
    for (int i = 0; i < 3; ++i) back += h[i] * F.derivative(i);
    CHECK(back == g);  // the descent consumes exactly the ideal part
  }
}

TEST_CASE("picard-fuchs operator for the hesse vacuum") {
  PicardFuchsODE ode = picard_fuchs(hesse(GQ(0)), 0);
  REQUIRE(ode.order == 2);
  // frozen from the series recurrence 27(m+3)(m+2) c_{m+3} = -(m+1)^2 c_m:
  // (27 + u^3) y'' + 3u^2 y' + u y = 0
  CHECK(ode.coeffs[2].str() == "u^3 + 27");
  CHECK(ode.coeffs[1].str() == "3*u^2");
  CHECK(ode.coeffs[0].str() == "u");
  REQUIRE(ode.singular_points.size() == 3);
  for (auto& s : ode.singular_points) {
    cplx s3 = s * s * s;
    CHECK(std::abs(s3 + 27.0) < 1e-9);  // singular exactly at u^3 = -27
  }
}

TEST_CASE("picard-fuchs from the hypersurface side agrees") {
  PicardFuchsODE lg = picard_fuchs(hesse(GQ(0)), 0);
  PicardFuchsODE cy = picard_fuchs_cy(hesse(GQ(0)));
  REQUIRE(cy.order == lg.order);
  for (int j = 0; j <= lg.order; ++j) CHECK(cy.coeffs[j] == lg.coeffs[j]);
}

TEST_CASE("operator coefficients respect the u -> zeta u covariance") {
  // rotating u by a cube root of unity maps the operator to a unit multiple
  // of itself iff (power - j) mod 3 is one constant across all terms
  PicardFuchsODE ode = picard_fuchs(hesse(GQ(0)), 0);
  int residue_class = -1;
  for (int j = 0; j <= ode.order; ++j)
    for (size_t k = 0; k < ode.coeffs[j].c.size(); ++k)
      if (!ode.coeffs[j].c[k].is_zero()) {
        int cls = ((static_cast<int>(k) - j) % 3 + 3) % 3;
        if (residue_class < 0) residue_class = cls;
        CHECK(cls == residue_class);
      }
}

TEST_CASE("picard-fuchs for the socle direction stays at order <= mu_prime") {
  LGPotential P = hesse(GQ(0));
  JacobiBasis B = compute_basis(P);
  PicardFuchsODE ode = picard_fuchs(P, B.prime_indices[1]);
  CHECK(ode.order <= 2);
}
