#ifndef LGTT_ELLIPTIC_HPP
#define LGTT_ELLIPTIC_HPP

#include <array>

#include "lgtt/jacobi.hpp"
#include "lgtt/periods.hpp"

namespace lgtt {

// Periods of the holomorphic form on the plane cubic
//     z1^3 + z2^3 + z3^3 + u z1 z2 z3 = 0   in P^2.
//
// A linear change of coordinates centered at the inflection point (1,-1,0)
// brings the curve to Y^2 = P(X; u) with
//     P = -(108 + 4u^3)/27 X^3 - u^2/3 X^2 - 2u/9 X - 1/27,
// and the residue form res(Omega/F) becomes (1/3) dX / Y. Cycles are loops
// around pairs of roots of P; root labels and square-root branches are
// continued from u = 0, so each period is holomorphic on |u| < 3.
struct EllipticPeriods {
  cplx Pi0, Pi1;  // periods over delta_0, delta_1 (Im tau > 0 at the base)
  cplx tau;       // Pi1 / Pi0
};

class HesseCurve {
public:
  explicit HesseCurve(int quad_nodes = 80, double step = 0.12);

  EllipticPeriods periods(cplx u) const;

  // holomorphic derivatives d^k Pi / du^k via Cauchy circles
  std::array<cplx, 2> period_derivative(cplx u, int k = 1, double rho = 0.35,
                                        int nodes = 48) const;

  static std::array<cplx, 4> cubic_coeffs(cplx u);  // c3, c2, c1, c0

private:
  int nodes_;
  double step_;
  std::vector<double> gl_x_, gl_w_;
  int sign_B_ = 0;  // orientation of delta_1, fixed at the base point

  struct Frame {
    std::array<cplx, 3> roots;
    cplx anchorA, anchorB;
  };
  Frame base_frame() const;
  Frame advance(const Frame& f, cplx u) const;
  std::pair<cplx, cplx> raw_periods(const Frame& f, cplx u) const;
  cplx cycle_integral(const std::array<cplx, 3>& roots, int p, int q, int other, cplx c3,
                      cplx& anchor) const;
};

// Operation wrapper: validates the Hesse family shape and flags the
// degenerate fibers u^3 = -27.
EllipticPeriods cy_periods_n3(const LGPotential& P, cplx u, double tol);

}  // namespace lgtt

#endif
