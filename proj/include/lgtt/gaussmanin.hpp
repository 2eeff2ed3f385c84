#ifndef LGTT_GAUSSMANIN_HPP
#define LGTT_GAUSSMANIN_HPP

#include "lgtt/jacobi.hpp"
#include "lgtt/ratfunc.hpp"

namespace lgtt {

// --------------------------------------------------- multiplication operators

// Column-sparse exact matrix: col[a] lists (row b, value).
struct SparseColMat {
  long n = 0;
  std::vector<std::vector<std::pair<long, GQ>>> col;

  long nonzeros() const {
    long z = 0;
    for (auto& c : col) z += static_cast<long>(c.size());
    return z;
  }
};

// C_i = multiplication by psi_i on Jac(F); column a of C[i] is the basis
// expansion of normal_form(psi_i * phi_a). Dense mu' x mu' restrictions to
// Jac(F)' are materialized at desk scale only.
struct ConnectionMatrices {
  long mu = 0, mu_prime = 0;
  std::vector<SparseColMat> C;
  std::vector<std::vector<std::vector<GQ>>> restricted_C;  // empty when mu' > 64
};

ConnectionMatrices c_matrices(const LGPotential& P);
ConnectionMatrices c_matrices(GJacobiRing& ring);

// exact commutator check [C_i, C_j] = 0
bool c_matrices_commute(const ConnectionMatrices& M, int i, int j);

// ------------------------------------------------- Griffiths-Dwork reduction

struct GDTerm {
  GPoly poly;
  int pole;
  bool irreducible;  // nonzero normal-form part that cannot descend
};

struct GDReduction {
  std::vector<GDTerm> terms;
  bool fully_reduced = true;  // no irreducible part above pole order 1
};

// Rewrite the class of phi Omega / F^k as lower pole-order classes plus the
// flagged irreducible normal-form parts. phi must be homogeneous of degree
// n(k-1) in the homogeneous case.
GDReduction griffiths_dwork_reduce(const GPoly& phi, int k, const LGPotential& P);

// ------------------------------------------------------------- Picard-Fuchs

struct PicardFuchsODE {
  int direction = 0;
  int target = 0;  // basis index the cyclic derivation starts from
  int order = 0;
  std::vector<UPoly> coeffs;          // coeffs[j] * y^(j), j = 0..order, lead monic
  std::vector<cplx> singular_points;  // numeric roots of coeffs[order]
};

// Minimal-order operator with polynomial coefficients annihilating the
// periods of the target class along a one-parameter marginal family.
// Derived on the LG side: u-differentiation in the twisted de Rham complex.
PicardFuchsODE picard_fuchs(const LGPotential& P, int target_basis_index = 0);

// Same operator derived on the hypersurface side by pole-order reduction;
// independent cross-check of the reduction machinery.
PicardFuchsODE picard_fuchs_cy(const LGPotential& P);

// Twisted de Rham class of [g dz] expanded over the Jacobi basis, exact in u.
std::vector<RatFunc> twisted_reduce(JacobiRing<RatFunc>& ring, Poly<RatFunc> g);

// Residual |L y| / scale of the operator applied to numeric samples.
double pf_residual(const PicardFuchsODE& ode, cplx u, const std::vector<cplx>& derivs);

}  // namespace lgtt

#endif
