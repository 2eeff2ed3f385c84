#include "lgtt/thimble.hpp"

#include <cstdlib>

namespace lgtt {

IMat imat_identity(int n) {
  IMat I(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

IMat imat_mul(const IMat& A, const IMat& B) {
  size_t r = A.size(), k = B.size(), c = B[0].size();
  IMat R(r, std::vector<long>(c, 0));
  for (size_t i = 0; i < r; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (A[i][t] == 0) continue;
      for (size_t j = 0; j < c; ++j) R[i][j] += A[i][t] * B[t][j];
    }
  return R;
}

long imat_det(IMat A) {
  // Bareiss fraction-free elimination
  int n = static_cast<int>(A.size());
  long prev = 1;
  long sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (A[k][k] == 0) {
      int sel = -1;
      for (int i = k + 1; i < n; ++i)
        if (A[i][k] != 0) { sel = i; break; }
      if (sel < 0) return 0;
      std::swap(A[k], A[sel]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev;
    prev = A[k][k];
  }
  return sign * A[n - 1][n - 1];
}

namespace {

// Smith normal form with column transforms tracked; returns rank.
int smith_rank_with_V(IMat A, IMat& V) {
  int r = static_cast<int>(A.size());
  int c = static_cast<int>(A[0].size());
  V = imat_identity(c);
  int t = 0;
  while (t < r && t < c) {
    // locate smallest nonzero entry in the trailing block
    int pi = -1, pj = -1;
    long best = 0;
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j)
        if (A[i][j] != 0 && (pi < 0 || std::labs(A[i][j]) < best)) {
          best = std::labs(A[i][j]);
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    std::swap(A[t], A[pi]);
    for (int i = 0; i < r; ++i) std::swap(A[i][t], A[i][pj]);
    for (int i = 0; i < c; ++i) std::swap(V[i][t], V[i][pj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < r; ++i) {
        if (A[i][t] == 0) continue;
        long q = A[i][t] / A[t][t];
        for (int j = 0; j < c; ++j) A[i][j] -= q * A[t][j];
        if (A[i][t] != 0) {  // remainder smaller than pivot: swap up, restart
          std::swap(A[t], A[i]);
          clean = false;
        }
      }
      for (int j = t + 1; j < c; ++j) {
        if (A[t][j] == 0) continue;
        long q = A[t][j] / A[t][t];
        for (int i = 0; i < r; ++i) A[i][j] -= q * A[i][t];
        for (int i = 0; i < c; ++i) V[i][j] -= q * V[i][t];
        if (A[t][j] != 0) {
          for (int i = 0; i < r; ++i) std::swap(A[i][t], A[i][j]);
          for (int i = 0; i < c; ++i) std::swap(V[i][t], V[i][j]);
          clean = false;
        }
      }
    }
    ++t;
  }
  return t;
}

}  // namespace

std::vector<std::vector<long>> integer_kernel(const IMat& A) {
  IMat V;
  int rank = smith_rank_with_V(A, V);
  int c = static_cast<int>(A[0].size());
  std::vector<std::vector<long>> out;
  for (int j = rank; j < c; ++j) {
    std::vector<long> v(c);
    for (int i = 0; i < c; ++i) v[i] = V[i][j];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<long>> column_lattice_basis(const IMat& A) {
  int r = static_cast<int>(A.size());
  int c = static_cast<int>(A[0].size());
  IMat M = A;  // column operations only
  int j0 = 0;
  for (int i = 0; i < r && j0 < c; ++i) {
    for (;;) {
      int sel = -1;
      long best = 0;
      for (int j = j0; j < c; ++j)
        if (M[i][j] != 0 && (sel < 0 || std::labs(M[i][j]) < best)) {
          best = std::labs(M[i][j]);
          sel = j;
        }
      if (sel < 0) break;
      for (int k = 0; k < r; ++k) std::swap(M[k][j0], M[k][sel]);
      bool finished = true;
      for (int j = j0 + 1; j < c; ++j) {
        if (M[i][j] == 0) continue;
        long q = M[i][j] / M[i][j0];
        for (int k = 0; k < r; ++k) M[k][j] -= q * M[k][j0];
        if (M[i][j] != 0) finished = false;
      }
      if (finished) {
        ++j0;
        break;
      }
    }
  }
  std::vector<std::vector<long>> out;
  for (int j = 0; j < j0; ++j) {
    std::vector<long> v(r);
    for (int i = 0; i < r; ++i) v[i] = M[i][j];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<int> diagonal_exponents(const GPoly& f) {
  int n = f.nvars();
  std::vector<int> m(n, 0);
  for (auto& [mono, c] : f.terms()) {
    int var = -1;
    for (int i = 0; i < n; ++i) {
      if (mono.e[i] == 0) continue;
      if (var >= 0) return {};  // mixed monomial
      var = i;
    }
    if (var < 0 || c != GQ(1)) return {};
    if (m[var] != 0) return {};
    m[var] = mono.e[var];
  }
  for (int i = 0; i < n; ++i)
    if (m[i] < 2) return {};
  return m;
}

std::vector<int> product_sectors(const ThimbleBasis& B, long a) {
  int n = static_cast<int>(B.m.size());
  std::vector<int> j(n);
  for (int v = n - 1; v >= 0; --v) {
    int w = B.m[v] - 1;
    j[v] = static_cast<int>(a % w);
    a /= w;
  }
  return j;
}

ThimbleBasis thimble_basis(const LGPotential& P, Side /*side*/) {
  std::vector<int> m = diagonal_exponents(P.f);
  if (m.empty())
    throw std::domain_error("thimble basis requires a diagonal Fermat potential at u = 0");
  ThimbleBasis B;
  B.m = m;
  long rank = 1;
  for (int mi : m) rank *= (mi - 1);
  B.rank = rank;

  // 1-variable rotation C_j -> C_{j+1}, with C_{m-1} = -sum_j C_j
  auto t1 = [&](int mi) {
    int w = mi - 1;
    IMat T(w, std::vector<long>(w, 0));
    for (int j = 0; j + 1 < w; ++j) T[j + 1][j] = 1;
    for (int i = 0; i < w; ++i) T[i][w - 1] = -1;
    return T;
  };
  std::vector<IMat> Ts;
  for (int mi : m) Ts.push_back(t1(mi));

  IMat T(rank, std::vector<long>(rank, 0));
  for (long row = 0; row < rank; ++row) {
    auto ri = product_sectors(B, row);
    for (long col = 0; col < rank; ++col) {
      auto ci = product_sectors(B, col);
      long v = 1;
      for (size_t k = 0; k < m.size(); ++k) v *= Ts[k][ri[k]][ci[k]];
      T[row][col] = v;
    }
  }
  B.monodromy = T;

  IMat TmI = T;
  for (long i = 0; i < rank; ++i) TmI[i][i] -= 1;
  auto inv = integer_kernel(TmI);
  auto img = column_lattice_basis(TmI);
  B.n_invariant = static_cast<int>(inv.size());
  if (static_cast<long>(inv.size() + img.size()) != rank)
    throw std::runtime_error("thimble basis: kernel/image ranks do not fill the lattice");
  B.adapted = IMat();
  for (auto& v : inv) B.adapted.push_back(v);
  for (auto& v : img) B.adapted.push_back(v);
  if (imat_det(B.adapted) == 0)
    throw std::runtime_error("thimble basis: adapted change of basis is singular");
  return B;
}

}  // namespace lgtt
