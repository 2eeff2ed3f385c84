#include "lgtt/gaussmanin.hpp"

#include <cmath>

namespace lgtt {

// ---------------------------------------------------------------- C matrices

ConnectionMatrices c_matrices(GJacobiRing& ring) {
  const auto& B = ring.basis();
  const auto& P = ring.potential();
  ConnectionMatrices M;
  M.mu = B.mu;
  M.mu_prime = B.mu_prime;
  long d = P.w.d;
  std::unordered_map<Monomial, long, MonoHash> idx;
  for (long a = 0; a < B.mu; ++a) idx.emplace(B.monomials[a], a);
  for (int i = 0; i < P.s(); ++i) {
    SparseColMat Ci;
    Ci.n = B.mu;
    Ci.col.resize(B.mu);
    for (long a = 0; a < B.mu; ++a) {
      GPoly prod(P.marginals[i] * B.monomials[a], GQ(1));
      GPoly nf = ring.normal_form(prod);
      for (auto& [mono, coeff] : nf.terms()) {
        auto it = idx.find(mono);
        if (it == idx.end()) throw std::runtime_error("normal form outside basis support");
        long b = it->second;
        if (B.charges[b] != B.charges[a] + d)
          throw std::runtime_error("charge bookkeeping violated in C matrix");
        Ci.col[a].emplace_back(b, coeff);
      }
    }
    if (B.mu_prime > 0 && B.mu_prime <= 64) {
      std::vector<std::vector<GQ>> Ri(B.mu_prime, std::vector<GQ>(B.mu_prime, GQ(0)));
      for (long c = 0; c < B.mu_prime; ++c)
        for (auto& [b, v] : Ci.col[B.prime_indices[c]])
          for (long r = 0; r < B.mu_prime; ++r)
            if (B.prime_indices[r] == b) Ri[r][c] = v;
      M.restricted_C.push_back(std::move(Ri));
    }
    M.C.push_back(std::move(Ci));
  }
  return M;
}

ConnectionMatrices c_matrices(const LGPotential& P) {
  GJacobiRing ring(P);
  return c_matrices(ring);
}

namespace {

std::map<long, GQ> sparse_compose_column(const SparseColMat& A, const SparseColMat& B,
                                         long a) {
  // column a of A*B
  std::map<long, GQ> out;
  for (auto& [k, v] : B.col[a])
    for (auto& [b, w] : A.col[k]) {
      GQ& slot = out[b];
      slot += v * w;
      if (slot.is_zero()) out.erase(b);
    }
  return out;
}

}  // namespace

bool c_matrices_commute(const ConnectionMatrices& M, int i, int j) {
  const auto &A = M.C[i], &B = M.C[j];
  for (long a = 0; a < M.mu; ++a)
    if (sparse_compose_column(A, B, a) != sparse_compose_column(B, A, a)) return false;
  return true;
}

// -------------------------------------------------- Griffiths-Dwork descent

namespace {

// One descent step: phi = r + sum h_i dF/dz_i, and the ideal part drops to
// (div h) Omega / ((k-1) F^{k-1}) modulo exact forms. The normal-form part r
// stays at its pole order; at the input level that is the flagged
// irreducible obstruction, below it is just a reduced output class.
void gd_rec(GJacobiRing& ring, const GPoly& phi, int k, int input_pole, GDReduction& out) {
  if (phi.is_zero()) return;
  if (k <= 1) {
    out.terms.push_back({phi, 1, false});
    return;
  }
  auto [r, h] = ring.nf_decompose(phi);
  if (!r.is_zero()) {
    bool top = (k == input_pole);
    out.terms.push_back({r, k, top});
    if (top) out.fully_reduced = false;
  }
  GPoly div(phi.nvars());
  for (int i = 0; i < phi.nvars(); ++i) div += h[i].derivative(i);
  gd_rec(ring, div / GQ(Rat(k - 1)), k - 1, input_pole, out);
}

}  // namespace

GDReduction griffiths_dwork_reduce(const GPoly& phi, int k, const LGPotential& P) {
  if (k < 2) throw std::domain_error("griffiths_dwork_reduce: pole order must be >= 2");
  int n = P.nvars();
  if (!phi.is_zero()) {
    if (!phi.is_homogeneous())
      throw std::domain_error("griffiths_dwork_reduce: phi must be homogeneous");
    if (P.w.is_homogeneous_case() && phi.total_degree() != n * (k - 1))
      throw std::domain_error("griffiths_dwork_reduce: degree must be n(k-1)");
  }
  GJacobiRing ring(P, /*track_cofactors=*/true);
  GDReduction out;
  gd_rec(ring, phi, k, k, out);
  return out;
}

// ------------------------------------------------------------ Picard-Fuchs

namespace {

Poly<RatFunc> lift_poly(const GPoly& p) {
  Poly<RatFunc> r(p.nvars());
  for (auto& [m, c] : p.terms()) r.add_term(m, RatFunc(c));
  return r;
}

PotentialT<RatFunc> symbolic_potential(const LGPotential& P) {
  if (P.s() != 1)
    throw std::domain_error("picard_fuchs: one-parameter families only");
  return PotentialT<RatFunc>(lift_poly(P.f), P.w, P.marginals, {RatFunc::var()});
}

// Solve sum_j alpha_j rows[j] = target over the rational-function field.
bool solve_dependence(const std::vector<std::vector<RatFunc>>& rows,
                      const std::vector<RatFunc>& target, std::vector<RatFunc>& alpha) {
  size_t r = rows.size();
  if (r == 0) return false;
  size_t dim = target.size();
  // augmented transpose system, Gaussian elimination
  std::vector<std::vector<RatFunc>> A(dim, std::vector<RatFunc>(r + 1));
  for (size_t i = 0; i < dim; ++i) {
    for (size_t j = 0; j < r; ++j) A[i][j] = rows[j][i];
    A[i][r] = target[i];
  }
  size_t rank = 0;
  std::vector<int> pivot_of_col(r, -1);
  for (size_t col = 0; col < r && rank < dim; ++col) {
    size_t sel = rank;
    while (sel < dim && A[sel][col].is_zero()) ++sel;
    if (sel == dim) continue;
    std::swap(A[rank], A[sel]);
    RatFunc inv = RatFunc(1) / A[rank][col];
    for (size_t j = col; j <= r; ++j) A[rank][j] *= inv;
    for (size_t i = 0; i < dim; ++i) {
      if (i == rank || A[i][col].is_zero()) continue;
      RatFunc f = A[i][col];
      for (size_t j = col; j <= r; ++j) A[i][j] -= f * A[rank][j];
    }
    pivot_of_col[col] = static_cast<int>(rank);
    ++rank;
  }
  for (size_t i = rank; i < dim; ++i)
    if (!A[i][r].is_zero()) return false;  // inconsistent: rows independent of target
  alpha.assign(r, RatFunc(0));
  for (size_t col = 0; col < r; ++col)
    if (pivot_of_col[col] >= 0) alpha[col] = A[pivot_of_col[col]][r];
  return true;
}

// common denominator clearing + content normalization, lead coefficient monic
std::vector<UPoly> normalize_operator(const std::vector<RatFunc>& op) {
  UPoly common(1);
  for (auto& c : op) {
    UPoly g = upoly_gcd(common, c.den);
    common = upoly_divmod(common * c.den, g, nullptr);
  }
  std::vector<UPoly> out;
  for (auto& c : op) out.push_back(c.num * upoly_divmod(common, c.den, nullptr));
  UPoly content;
  for (auto& p : out)
    content = content.is_zero() ? p : upoly_gcd(content, p);
  if (!content.is_zero() && content.degree() > 0)
    for (auto& p : out) p = upoly_divmod(p, content, nullptr);
  GQ lead = out.back().lead();
  for (auto& p : out) p = p * (GQ(1) / lead);
  return out;
}

PicardFuchsODE operator_from_rows(const std::vector<std::vector<RatFunc>>& derivs,
                                  long order_bound, int target) {
  std::vector<std::vector<RatFunc>> rows;
  std::vector<RatFunc> alpha;
  for (size_t r = 0; r < derivs.size(); ++r) {
    if (r > 0 && solve_dependence(rows, derivs[r], alpha)) {
      std::vector<RatFunc> op;  // y^(r) - sum alpha_j y^(j) = 0
      for (size_t j = 0; j < r; ++j) op.push_back(-alpha[j]);
      op.push_back(RatFunc(1));
      PicardFuchsODE ode;
      ode.target = target;
      ode.order = static_cast<int>(r);
      ode.coeffs = normalize_operator(op);
      ode.singular_points = upoly_roots(ode.coeffs.back());
      return ode;
    }
    rows.push_back(derivs[r]);
    if (static_cast<long>(r) > order_bound)
      throw std::runtime_error("picard_fuchs: no dependence below the rank bound (reduction bug?)");
  }
  throw std::runtime_error("picard_fuchs: derivation exhausted without dependence");
}

}  // namespace

std::vector<RatFunc> twisted_reduce(JacobiRing<RatFunc>& ring, Poly<RatFunc> g) {
  const auto& B = ring.basis();
  std::vector<RatFunc> acc(B.mu, RatFunc(0));
  int n = ring.potential().nvars();
  while (!g.is_zero()) {
    auto [r, h] = ring.nf_decompose(g);
    for (auto& [m, c] : r.terms()) {
      int a = B.index_of(m);
      if (a < 0) throw std::runtime_error("twisted_reduce: normal form escaped the basis");
      acc[a] += c;
    }
    Poly<RatFunc> div(n);
    for (int i = 0; i < n; ++i) div += h[i].derivative(i);
    g = -div;  // e^F (h . dF) dz = -e^F (div h) dz modulo exact forms
  }
  return acc;
}

PicardFuchsODE picard_fuchs(const LGPotential& P, int target_basis_index) {
  PotentialT<RatFunc> Psym = symbolic_potential(P);
  JacobiRing<RatFunc> ring(Psym, /*track_cofactors=*/true);
  const auto& B = ring.basis();
  if (target_basis_index < 0 || target_basis_index >= B.mu)
    throw std::domain_error("picard_fuchs: target index out of range");
  Poly<RatFunc> psi(P.marginals[0], RatFunc(1));

  // columns of the psi-multiplication in twisted cohomology, built lazily
  std::vector<std::optional<std::vector<RatFunc>>> psi_col(B.mu);
  auto column = [&](long b) -> const std::vector<RatFunc>& {
    if (!psi_col[b])
      psi_col[b] = twisted_reduce(ring, psi * Poly<RatFunc>(B.monomials[b], RatFunc(1)));
    return *psi_col[b];
  };

  std::vector<std::vector<RatFunc>> derivs;
  std::vector<RatFunc> v(B.mu, RatFunc(0));
  v[target_basis_index] = RatFunc(1);
  derivs.push_back(v);
  long bound = B.mu_prime > 0 ? B.mu_prime : B.mu;
  for (long step = 0; step <= bound + 1; ++step) {
    const auto& prev = derivs.back();
    std::vector<RatFunc> next(B.mu, RatFunc(0));
    for (long b = 0; b < B.mu; ++b) {
      if (prev[b].is_zero()) continue;
      next[b] += prev[b].derivative();
      const auto& col = column(b);
      for (long c = 0; c < B.mu; ++c) next[c] += prev[b] * col[c];
    }
    derivs.push_back(std::move(next));
    std::vector<std::vector<RatFunc>> head(derivs.begin(), derivs.end() - 1);
    std::vector<RatFunc> alpha;
    if (solve_dependence(head, derivs.back(), alpha)) break;
  }
  PicardFuchsODE ode = operator_from_rows(derivs, bound, target_basis_index);
  ode.direction = 0;
  return ode;
}

// CY-side derivation: P^(k)(u) = (-1)^k k! * class of psi^k Omega / F^(k+1),
// reduced by pole order; dependence among the reduced rows gives the ODE.
PicardFuchsODE picard_fuchs_cy(const LGPotential& P) {
  PotentialT<RatFunc> Psym = symbolic_potential(P);
  if (!P.w.is_homogeneous_case())
    throw std::domain_error("picard_fuchs_cy: homogeneous degree-n case only");
  JacobiRing<RatFunc> ring(Psym, /*track_cofactors=*/true);
  const auto& B = ring.basis();
  int n = P.nvars();

  // coordinates: pairs (pole order, basis monomial); rows expanded over them
  std::vector<std::pair<int, int>> coords;
  auto coord_index = [&](int pole, int a) {
    for (size_t i = 0; i < coords.size(); ++i)
      if (coords[i] == std::make_pair(pole, a)) return static_cast<int>(i);
    coords.emplace_back(pole, a);
    return static_cast<int>(coords.size() - 1);
  };

  Poly<RatFunc> psi(P.marginals[0], RatFunc(1));
  std::vector<std::map<int, RatFunc>> sparse_rows;
  long bound = B.mu_prime > 0 ? B.mu_prime : B.mu;
  for (int k = 0; static_cast<long>(k) <= bound + 1; ++k) {
    // reduce psi^k Omega / F^(k+1)
    Poly<RatFunc> numer(Monomial(n), RatFunc(1));
    for (int j = 0; j < k; ++j) numer *= psi;
    RatFunc sign_fact((k % 2) ? GQ(-1) : GQ(1));
    for (int j = 2; j <= k; ++j) sign_fact *= RatFunc(j);

    std::map<int, RatFunc> row;
    std::function<void(Poly<RatFunc>, int, RatFunc)> rec = [&](Poly<RatFunc> phi, int pole,
                                                               RatFunc scale) {
      if (phi.is_zero()) return;
      auto [r, h] = ring.nf_decompose(phi);
      for (auto& [m, c] : r.terms()) {
        int a = B.index_of(m);
        if (a < 0) throw std::runtime_error("picard_fuchs_cy: class escaped the basis");
        row[coord_index(pole, a)] += scale * c;
      }
      if (pole <= 1) {
        if (!(phi - r).is_zero())
          throw std::runtime_error("picard_fuchs_cy: nontrivial ideal part at pole order 1");
        return;
      }
      Poly<RatFunc> div(n);
      for (int i = 0; i < n; ++i) div += h[i].derivative(i);
      rec(div, pole - 1, scale / RatFunc(pole - 1));
    };
    rec(numer, k + 1, sign_fact);
    sparse_rows.push_back(std::move(row));
  }

  size_t dim = coords.size();
  std::vector<std::vector<RatFunc>> rows;
  for (auto& sr : sparse_rows) {
    std::vector<RatFunc> dense(dim, RatFunc(0));
    for (auto& [i, v] : sr) dense[i] = v;
    rows.push_back(std::move(dense));
  }
  PicardFuchsODE ode = operator_from_rows(rows, bound, 0);
  ode.direction = 0;
  return ode;
}

double pf_residual(const PicardFuchsODE& ode, cplx u, const std::vector<cplx>& derivs) {
  if (static_cast<int>(derivs.size()) != ode.order + 1)
    throw std::domain_error("pf_residual: need y and its first `order` derivatives");
  cplx acc = 0;
  double scale = 0;
  for (int j = 0; j <= ode.order; ++j) {
    cplx term = ode.coeffs[j].eval(u) * derivs[j];
    acc += term;
    scale += std::abs(term);
  }
  return scale > 0 ? std::abs(acc) / scale : std::abs(acc);
}

}  // namespace lgtt
