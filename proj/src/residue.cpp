#include "lgtt/residue.hpp"

#include <cmath>

namespace lgtt {

std::vector<std::vector<GQ>> ResidueFunctional::gram() const {
  const auto& B = ring_->basis();
  long mu = B.mu;
  std::vector<std::vector<GQ>> G(mu, std::vector<GQ>(mu));
  for (long a = 0; a < mu; ++a)
    for (long b = a; b < mu; ++b) {
      GPoly prod(B.monomials[a] * B.monomials[b], GQ(1));
      G[a][b] = (*this)(prod);
      G[b][a] = G[a][b];
    }
  return G;
}

GQ residue_symbol(const GPoly& g, const ResidueFunctional& R) { return R(g); }

GQ carlson_c_tilde(int a, int b, int n) {
  if (a < 1 || b < 1) throw std::domain_error("carlson constants need a,b >= 1");
  long exponent = static_cast<long>(a) * (a - 1) / 2 + static_cast<long>(b) * (b - 1) / 2 +
                  n + static_cast<long>(b - 1) * (b - 1);
  Rat fact(1);
  for (int k = 2; k < a; ++k) fact *= Rat(k);
  for (int k = 2; k < b; ++k) fact *= Rat(k);
  Rat v = Rat(exponent % 2 ? -1 : 1) / fact;
  return GQ(v);
}

GQ carlson_c(int a, int b, int n, int deg_f) {
  return carlson_c_tilde(a, b, n) * GQ(Rat(deg_f));
}

GQ cy_pairing(const GPoly& phi, const GPoly& psi, const ResidueFunctional& R) {
  int n = R.ring().potential().nvars();
  auto level = [&](const GPoly& p) {
    int d = p.is_zero() ? 0 : p.total_degree();
    if (!p.is_zero() && !p.is_homogeneous())
      throw std::domain_error("cy_pairing: arguments must be homogeneous");
    if (d % n != 0) throw std::domain_error("cy_pairing: degree is not a multiple of n");
    return d / n + 1;
  };
  int a = level(phi), b = level(psi);
  return carlson_c_tilde(a, b, n) * R(phi * psi);
}

cplx torus_residue_oracle(const GPoly& g, const LGPotential& P, int nodes, double radius) {
  int n = P.nvars();
  if (n > 3) throw std::domain_error("torus oracle limited to n <= 3");
  GPoly F = P.F();
  std::vector<GPoly> dF;
  for (int i = 0; i < n; ++i) dF.push_back(F.derivative(i));

  // trapezoid product rule on |z_i| = radius; exact for Laurent polynomials,
  // exponentially convergent for the analytic integrand here
  const double two_pi = 2.0 * M_PI;
  cplx acc = 0;
  std::vector<int> idx(n, 0);
  std::vector<cplx> z(n);
  for (;;) {
    cplx jac = 1;  // product of dz_i/dtheta_i / (2 pi i) = z_i / (2 pi)
    for (int i = 0; i < n; ++i) {
      double th = two_pi * idx[i] / nodes;
      z[i] = radius * cplx(std::cos(th), std::sin(th));
      jac *= z[i];
    }
    cplx den = 1;
    for (int i = 0; i < n; ++i) den *= eval_poly(dF[i], z);
    acc += eval_poly(g, z) / den * jac;
    int k = 0;
    while (k < n && ++idx[k] == nodes) idx[k++] = 0;
    if (k == n) break;
  }
  double norml = 1.0;
  for (int i = 0; i < n; ++i) norml /= nodes;
  return acc * norml;
}

bool is_gaussian_rank_full(std::vector<std::vector<GQ>> M) {
  size_t n = M.size();
  size_t rank = 0;
  for (size_t col = 0; col < n && rank < n; ++col) {
    size_t sel = rank;
    while (sel < n && M[sel][col].is_zero()) ++sel;
    if (sel == n) return false;
    std::swap(M[rank], M[sel]);
    GQ inv = GQ(1) / M[rank][col];
    for (size_t j = col; j < n; ++j) M[rank][j] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == rank || M[r][col].is_zero()) continue;
      GQ f = M[r][col];
      for (size_t j = col; j < n; ++j) M[r][j] -= f * M[rank][j];
    }
    ++rank;
  }
  return rank == n;
}

}  // namespace lgtt
