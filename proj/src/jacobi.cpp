#include "lgtt/jacobi.hpp"

namespace lgtt {

std::vector<Monomial> monomials_of_wdeg(int nvars, const std::vector<long>& Q, long W) {
  std::vector<Monomial> out;
  if (W < 0) return out;
  Monomial cur(nvars);
  std::function<void(int, long)> rec = [&](int var, long rest) {
    if (var == nvars - 1) {
      if (rest % Q[var] == 0) {
        cur.e[var] = static_cast<uint16_t>(rest / Q[var]);
        out.push_back(cur);
      }
      return;
    }
    for (long k = rest / Q[var]; k >= 0; --k) {
      cur.e[var] = static_cast<uint16_t>(k);
      rec(var + 1, rest - k * Q[var]);
    }
  };
  rec(0, W);
  std::sort(out.begin(), out.end(), mono_less);
  return out;
}

long charge(const Monomial& A, const WeightSystem& w) {
  if (A.nvars() != w.nvars()) throw std::domain_error("charge: variable count mismatch");
  long l = 0;
  for (int i = 0; i < A.nvars(); ++i) l += (static_cast<long>(A.e[i]) + 1) * w.Q[i];
  return l;
}

GPoly normal_form(const GPoly& g, const LGPotential& P) {
  GJacobiRing R(P);
  return R.normal_form(g);
}

JacobiBasis compute_basis(const LGPotential& P) {
  GJacobiRing R(P);
  return R.basis();
}

long milnor_number(const LGPotential& P) {
  GJacobiRing R(P);
  return R.milnor();
}

std::vector<Monomial> marginal_monomials(const GPoly& f, const WeightSystem& w) {
  LGPotential P(f, w);
  GJacobiRing R(P);
  return R.marginal_monomials();
}

}  // namespace lgtt
