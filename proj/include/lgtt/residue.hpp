#ifndef LGTT_RESIDUE_HPP
#define LGTT_RESIDUE_HPP

#include <memory>

#include "lgtt/jacobi.hpp"

namespace lgtt {

// Grothendieck residue functional on Jac(F), normalized by res(Hess F) = mu.
// Computed by socle extraction: res(g) = mu * c_g / c_H where the normal
// forms of g and of Hess F have socle coefficients c_g and c_H.
class ResidueFunctional {
public:
  explicit ResidueFunctional(const LGPotential& P)
      : ring_(std::make_shared<GJacobiRing>(P)) {
    const auto& B = ring_->basis();
    mu_ = B.mu;
    socle_ = B.monomials[B.socle_index];
    c_hess_ = B.hessian_socle_coeff;
  }
  explicit ResidueFunctional(std::shared_ptr<GJacobiRing> ring) : ring_(std::move(ring)) {
    const auto& B = ring_->basis();
    mu_ = B.mu;
    socle_ = B.monomials[B.socle_index];
    c_hess_ = B.hessian_socle_coeff;
  }

  GJacobiRing& ring() const { return *ring_; }
  long mu() const { return mu_; }
  const GQ& socle_normalizer() const { return c_hess_; }

  GQ operator()(const GPoly& g) const {
    GPoly nf = ring_->normal_form(g);
    return GQ(Rat(mu_)) * nf.coeff(socle_) / c_hess_;
  }

  // Gram matrix res(phi_a phi_b) on the Jacobi basis.
  std::vector<std::vector<GQ>> gram() const;

private:
  std::shared_ptr<GJacobiRing> ring_;
  long mu_ = 0;
  Monomial socle_;
  GQ c_hess_;
};

GQ residue_symbol(const GPoly& g, const ResidueFunctional& R);

// Carlson-Griffiths pairing constants for phi of degree n(a-1), psi of n(b-1).
GQ carlson_c_tilde(int a, int b, int n);
GQ carlson_c(int a, int b, int n, int deg_f);

// Cup-product pairing of residue classes on the hypersurface:
// integral of res(Omega_phi) wedge res(Omega_psi) = c_tilde(a,b) res(phi psi).
GQ cy_pairing(const GPoly& phi, const GPoly& psi, const ResidueFunctional& R);

// Numeric oracle: (1/(2 pi i)^n) times the contour integral of
// g dz / (dF_1 ... dF_n) over the torus |z_i| = radius. Valid while no
// critical point of F crosses the torus (Fermat-type families, small |u|).
cplx torus_residue_oracle(const GPoly& g, const LGPotential& P, int nodes = 48,
                          double radius = 1.0);

bool is_gaussian_rank_full(std::vector<std::vector<GQ>> M);

}  // namespace lgtt

#endif
